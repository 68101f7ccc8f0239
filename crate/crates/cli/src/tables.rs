//! Recomputes the headline values for the named networks and renders a
//! comparison table against the expected numbers.

use crate::checks::{self, Tier};
use crate::report::{CheckRecord, Status};

pub struct TableRow {
    pub network: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub elapsed_ms: u64,
}

fn pick<'a>(records: &'a [CheckRecord], check_id: &str, graph_id: &str) -> &'a CheckRecord {
    records
        .iter()
        .find(|r| r.check_id == check_id && r.graph_id == graph_id)
        .unwrap_or_else(|| panic!("missing record {check_id} for {graph_id}"))
}

fn combine(records: &[CheckRecord], keys: &[(&str, &str)], network: &str, quantity: &str) -> TableRow {
    let sel: Vec<&CheckRecord> = keys.iter().map(|(c, g)| pick(records, c, g)).collect();
    let status = if sel.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if sel.iter().any(|r| r.status == Status::SkippedBudget) {
        Status::SkippedBudget
    } else {
        Status::Pass
    };
    TableRow {
        network: network.to_string(),
        quantity: quantity.to_string(),
        expected: sel
            .iter()
            .map(|r| r.expected.clone())
            .collect::<Vec<_>>()
            .join(" / "),
        computed: sel
            .iter()
            .map(|r| r.actual.clone())
            .collect::<Vec<_>>()
            .join(" / "),
        status,
        elapsed_ms: sel.iter().map(|r| r.elapsed_ms).sum(),
    }
}

pub fn run_tables(tier: Tier) -> (Vec<TableRow>, Vec<CheckRecord>) {
    let mut records = Vec::new();
    records.extend(checks::grid_values());
    records.extend(checks::f_family());
    records.extend(checks::family_values());
    records.extend(checks::generalized_hypercube());
    if tier >= Tier::Full {
        records.extend(checks::torus_exact());
        records.extend(checks::d4_products());
    }
    if tier >= Tier::Cert {
        records.extend(checks::torus_certificates());
        records.extend(checks::d8_p10());
    }
    records.extend(checks::product_bound_checks(tier));

    let mut rows = Vec::new();
    rows.push(combine(
        &records,
        &[
            ("grid-c-g0", "grid:5x5"),
            ("grid-c-g1", "grid:5x5"),
            ("grid-c-g2", "grid:5x5"),
        ],
        "grid:5x5",
        "c^0 / c^1 / c^2",
    ));
    rows.push(combine(
        &records,
        &[
            ("grid-t-g0", "grid:5x5"),
            ("grid-t-g1", "grid:5x5"),
            ("grid-t-g2", "grid:5x5"),
        ],
        "grid:5x5",
        "t^0 / t^1 / t^2",
    ));
    for id in ["F:5,1", "F:7,2", "F:9,3"] {
        rows.push(combine(
            &records,
            &[("fn-c", id), ("fn-t-formula", id), ("fn-t-oracle", id)],
            id,
            "c / t(formula) / t(oracle)",
        ));
    }
    rows.push(combine(
        &records,
        &[("gc-d4", "D:4"), ("tg-d4", "D:4"), ("class-d4", "D:4")],
        "D:4",
        "c^3 / t^3 / class",
    ));
    rows.push(combine(
        &records,
        &[("gc-d8", "D:8"), ("tg-d8", "D:8"), ("class-d8", "D:8")],
        "D:8",
        "c^3 / t^3 / class",
    ));
    rows.push(combine(
        &records,
        &[("gc-h-family", "H:22,2,3")],
        "H:22,2,3",
        "c^3",
    ));
    rows.push(combine(
        &records,
        &[("gc-h-family", "H:20,2,4")],
        "H:20,2,4",
        "c^4",
    ));
    rows.push(combine(
        &records,
        &[("ghc-c0", "ghc:4x4"), ("ghc-t0", "ghc:4x4")],
        "ghc:4x4",
        "c^0 / t^0",
    ));
    rows.push(combine(
        &records,
        &[("ghc-c1-range", "ghc:4x4"), ("ghc-c1-upper-cert", "ghc:4x4")],
        "ghc:4x4",
        "c^1 range / upper construction",
    ));
    if tier >= Tier::Full {
        rows.push(combine(
            &records,
            &[("torus-c0", "torus:8x8"), ("torus-c1", "torus:8x8")],
            "torus:8x8",
            "c^0 / c^1",
        ));
        rows.push(combine(
            &records,
            &[("torus-t0", "torus:8x8"), ("torus-t1", "torus:8x8")],
            "torus:8x8",
            "t^0 / t^1",
        ));
        rows.push(combine(
            &records,
            &[
                ("d4pn-c3", "prod(D:4,path:4)"),
                ("d4pn-c3", "prod(D:4,path:5)"),
                ("d4p5-t3", "prod(D:4,path:5)"),
            ],
            "D:4 x P_n",
            "c^3(P4) / c^3(P5) / t^3(P5)",
        ));
        rows.push(combine(
            &records,
            &[
                ("pb-case-i-bound", "D:4 x path:6"),
                ("pb-case-i-exact", "prod(D:4,path:6)"),
            ],
            "D:4 x P6",
            "case-i bound / exact t^3",
        ));
    }
    if tier >= Tier::Cert {
        rows.push(combine(
            &records,
            &[
                ("torus-c2-cert", "torus:8x8"),
                ("torus-c2-lower", "torus:8x8"),
                ("torus-c2-exact", "torus:8x8"),
            ],
            "torus:8x8",
            "c^2 upper cert / lower / exact",
        ));
        rows.push(combine(
            &records,
            &[
                ("torus-c3-cert", "torus:8x8"),
                ("torus-c3-lower", "torus:8x8"),
                ("torus-c3-exact", "torus:8x8"),
            ],
            "torus:8x8",
            "c^3 upper cert / lower / exact",
        ));
        rows.push(combine(
            &records,
            &[
                ("d8p10-c3-cert", "prod(D:8,path:10)"),
                ("d8p10-c3-lower", "prod(D:8,path:10)"),
                ("d8p10-c3-exact", "prod(D:8,path:10)"),
            ],
            "D:8 x P10",
            "c^3 upper cert / lower / exact",
        ));
        rows.push(combine(
            &records,
            &[
                ("pb-case-ii-bound", "D:8 x path:12"),
                ("pb-case-ii-cert", "prod(D:8,path:12)"),
            ],
            "D:8 x P12",
            "case-ii bound / certificate",
        ));
    }
    (rows, records)
}

pub fn render_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    let width_net = rows.iter().map(|r| r.network.len()).max().unwrap_or(8).max(8);
    let width_q = rows.iter().map(|r| r.quantity.len()).max().unwrap_or(8).max(8);
    let width_e = rows.iter().map(|r| r.expected.len()).max().unwrap_or(8).max(8);
    out.push_str(&format!(
        "{:<width_net$}  {:<width_q$}  {:<width_e$}  {:<24}  {}\n",
        "network", "quantity", "expected", "computed", "status"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:<width_net$}  {:<width_q$}  {:<width_e$}  {:<24}  {} ({} ms)\n",
            r.network, r.quantity, r.expected, r.computed, r.status, r.elapsed_ms
        ));
    }
    out
}
