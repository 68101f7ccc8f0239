use gnd_core::*;

fn main() {
    let t = std::time::Instant::now();
    let g: Graph = "prod(D:4,path:6)".parse::<FamilySpec>().unwrap().build(4096).unwrap();
    let r = gc_number(&g, 3, 10).unwrap();
    println!("D4xP6 c^3 = {:?} class={:?} in {:?}", r.value, r.class, t.elapsed());
    let tf = t_g_formula(&g, 3, 10).unwrap();
    println!("D4xP6 t^3 = {:?} method={:?}", tf.value, tf.method);

    let g: Graph = "ghc:4x4".parse::<FamilySpec>().unwrap().build(4096).unwrap();
    for good in [0usize, 1] {
        let t = std::time::Instant::now();
        let k = kappa(&g, good, g.n()).unwrap();
        let r = gc_number(&g, good, g.n()).unwrap();
        println!("K4xK4 kappa^{good} = {:?}, c^{good} = {:?} class={:?} in {:?}", k.value(), r.value, r.class, t.elapsed());
    }
    let tf = t_g_formula(&g, 0, g.n()).unwrap();
    println!("K4xK4 t^0 = {:?} method={:?}", tf.value, tf.method);

    // H graphs at feasible parameters
    for spec in ["H:22,2,3", "H:20,2,4"] {
        let t = std::time::Instant::now();
        let g: Graph = spec.parse::<FamilySpec>().unwrap().build(4096).unwrap();
        let good = if spec == "H:22,2,3" { 3 } else { 4 };
        let k = kappa(&g, good, g.n()).unwrap();
        let r = gc_number(&g, good, g.n()).unwrap();
        println!("{spec} kappa = {:?}, c^{good} = {:?} class={:?} in {:?}", k.value(), r.value, r.class, t.elapsed());
    }

    // torus capped kappa lower bounds for g=2,3
    let g: Graph = "torus:8x8".parse::<FamilySpec>().unwrap().build(4096).unwrap();
    let t = std::time::Instant::now();
    let k2 = kappa(&g, 2, 6).unwrap();
    println!("C8xC8 kappa^2 capped 6: {:?} in {:?}", k2, t.elapsed());
    let t = std::time::Instant::now();
    let k3 = kappa(&g, 3, 5).unwrap();
    println!("C8xC8 kappa^3 capped 5: {:?} in {:?}", k3, t.elapsed());

    // D8xP10 capped kappa
    let t = std::time::Instant::now();
    let g: Graph = "prod(D:8,path:10)".parse::<FamilySpec>().unwrap().build(4096).unwrap();
    println!("D8xP10 n={} ", g.n());
    let k = kappa(&g, 3, 3).unwrap();
    println!("D8xP10 kappa^3 capped 3: {:?} in {:?}", k, t.elapsed());
}
