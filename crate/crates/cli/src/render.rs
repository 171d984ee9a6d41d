//! Text, JSON and CSV emitters. JSON is pretty-printed from ordered
//! structures so repeated runs are byte-identical.

use std::fmt::Write as _;

use agtrellis::bounds::BoundReport;
use agtrellis::hermitian::HermitianSummary;
use agtrellis::rfunction::RTable;
use agtrellis::search::SearchResult;
use agtrellis::verify::{CheckOutcome, Status};
use agtrellis::{GonalitySequence, StateProfile};
use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn one_based(perm: &[usize]) -> Vec<usize> {
    perm.iter().map(|p| p + 1).collect()
}

/// All integers from -1 to 2g-2 in rows of `width`, jumps marked `*`.
pub fn jump_grid(table: &RTable, width: usize) -> String {
    let top = 2 * table.genus as i64 - 2;
    let cell = top.to_string().len().max(2) + 1;
    let mut out = String::new();
    let values: Vec<i64> = (-1..=top).collect();
    for row in values.chunks(width.max(1)) {
        let cells: Vec<String> = row
            .iter()
            .map(|v| {
                let mark = if table.jumps.contains(v) { "*" } else { " " };
                format!("{v:>cell$}{mark}")
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join(" ").trim_end());
    }
    out
}

pub fn gonality(gs: &GonalitySequence, table: &RTable, format: Format) -> String {
    let g = gs.genus();
    let width = gs.gonality() as usize;
    match format {
        Format::Json => {
            let rows: Vec<Value> = table
                .domain()
                .map(|n| {
                    let (a, b) = table.witnesses[(n + 1) as usize];
                    json!({
                        "n": n,
                        "r": table.values[(n + 1) as usize],
                        "witness": [a, b],
                        "jump": table.jumps.contains(&n),
                    })
                })
                .collect();
            pretty(&json!({
                "origin": gs.origin().to_string(),
                "genus": g,
                "gammas": gs.gammas(),
                "gaps": gs.gaps(),
                "r_table": rows,
                "jumps": table.jumps,
                "r_top": table.top(),
            }))
        }
        Format::Csv => {
            let mut out = String::from("n,r,witness_a,witness_b,jump\n");
            for n in table.domain() {
                let (a, b) = table.witnesses[(n + 1) as usize];
                let jump = u8::from(table.jumps.contains(&n));
                let _ = writeln!(out, "{n},{},{a},{b},{jump}", table.values[(n + 1) as usize]);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "origin   {}", gs.origin());
            let _ = writeln!(out, "genus    {g}");
            let _ = writeln!(out, "gammas   {}", joined(gs.gammas()));
            let _ = writeln!(out, "gaps     {}", joined(gs.gaps()));
            let _ = writeln!(out, "jumps    {}", joined(&table.jumps));
            let _ = writeln!(out, "R(2g-2)  {}", table.top());
            let _ = writeln!(out);
            let _ = writeln!(out, "{:>5}  {:>4}  witness", "N", "R(N)");
            for n in table.domain() {
                let (a, b) = table.witnesses[(n + 1) as usize];
                let _ = writeln!(
                    out,
                    "{n:>5}  {:>4}  {a} + {b}",
                    table.values[(n + 1) as usize]
                );
            }
            let _ = writeln!(out);
            let _ = writeln!(out, "jump grid, rows of {width} (jumps marked *)");
            out.push_str(&jump_grid(table, width));
            out
        }
    }
}

pub fn profile(p: &StateProfile, format: Format) -> String {
    match format {
        Format::Json => pretty(&serde_json::to_value(p).expect("profile serializes")),
        Format::Csv => {
            let mut out = String::from("i,p,f,delta,s\n");
            for i in 0..=p.n {
                let _ = writeln!(
                    out,
                    "{i},{},{},{},{}",
                    p.past[i], p.future[i], p.delta[i], p.state[i]
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "[{}, {}] code", p.n, p.k);
            let _ = writeln!(
                out,
                "{:>4} {:>4} {:>4} {:>6} {:>4}",
                "i", "p_i", "f_i", "Delta", "s_i"
            );
            for i in 0..=p.n {
                let _ = writeln!(
                    out,
                    "{i:>4} {:>4} {:>4} {:>6} {:>4}",
                    p.past[i], p.future[i], p.delta[i], p.state[i]
                );
            }
            let _ = writeln!(out, "s(C) = {}", p.s_max);
            let _ = writeln!(
                out,
                "state vector = ({})",
                p.state
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            );
            out
        }
    }
}

pub fn search(r: &SearchResult, format: Format) -> String {
    let perm = one_based(&r.best_permutation);
    match format {
        Format::Json => pretty(&json!({
            "strategy": r.strategy.to_string(),
            "best_s": r.best_s,
            "best_permutation": perm,
            "evaluations": r.evaluations,
            "exact": r.exact,
        })),
        Format::Csv => {
            let mut out = String::from("position,image,best_s,evaluations,exact\n");
            for (j, p) in perm.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{},{p},{},{},{}",
                    j + 1,
                    r.best_s,
                    r.evaluations,
                    u8::from(r.exact)
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "strategy     {}", r.strategy);
            let _ = writeln!(out, "best_s       {}", r.best_s);
            let _ = writeln!(
                out,
                "permutation  {}",
                perm.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            );
            let _ = writeln!(out, "evaluations  {}", r.evaluations);
            let _ = writeln!(out, "exact        {}", r.exact);
            out
        }
    }
}

fn bounds_csv(r: &BoundReport) -> String {
    let o = |v: Option<i64>| v.map_or(String::new(), |x| x.to_string());
    let ou = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
    let cells = [
        r.n.to_string(),
        r.k.to_string(),
        r.m.to_string(),
        r.g.to_string(),
        r.gamma2.to_string(),
        r.wolf.to_string(),
        u8::from(r.equality_region).to_string(),
        r.clifford.to_string(),
        r.goppa_like.to_string(),
        o(r.r_bound.map(|b| b.value)),
        o(r.r_bound.map(|b| b.chained)),
        o(r.gonality_bound),
        o(r.fso_bound),
        ou(r.min_distance),
        ou(r.exact_s),
        ou(r.searched_s),
    ];
    format!(
        "n,k,m,g,gamma2,wolf,equality_region,clifford,goppa_like,r_bound,r_bound_chained,gonality_bound,fso_bound,min_distance,exact_s,searched_s\n{}\n",
        cells.join(",")
    )
}

pub fn bounds(r: &BoundReport, format: Format) -> String {
    match format {
        Format::Json => pretty(&serde_json::to_value(r).expect("report serializes")),
        Format::Csv => bounds_csv(r),
        Format::Text => r.to_text(),
    }
}

pub fn hermitian(
    s: &HermitianSummary,
    report: &BoundReport,
    prof: Option<&StateProfile>,
    format: Format,
) -> String {
    match format {
        Format::Json => pretty(&json!({
            "code": s,
            "bounds": report,
            "profile": prof,
        })),
        Format::Csv => match prof {
            Some(p) => profile(p, Format::Csv),
            None => bounds_csv(report),
        },
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "Hermitian code over GF({}), m = {}", s.q * s.q, s.m);
            let _ = writeln!(out, "[n, k] = [{}, {}], genus {}", s.n, s.k, s.genus);
            let _ = writeln!(out, "Goppa distance floor n - m = {}", s.goppa_distance);
            let _ = writeln!(out, "self-orthogonal: {}", s.self_orthogonal);
            let _ = writeln!(out);
            out.push_str(&report.to_text());
            if let Some(p) = prof {
                let _ = writeln!(out);
                out.push_str(&profile(p, Format::Text));
            }
            out
        }
    }
}

pub fn verify(outcomes: &[CheckOutcome], format: Format) -> String {
    let label = |s: Status| match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::ExpectedDeviation => "DEVIATION",
    };
    match format {
        Format::Json => pretty(&serde_json::to_value(outcomes).expect("outcomes serialize")),
        Format::Csv => {
            let mut out = String::from("suite,status,name\n");
            for o in outcomes {
                let _ = writeln!(
                    out,
                    "{},{},\"{}\"",
                    o.suite,
                    label(o.status),
                    o.name.replace('"', "'")
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for o in outcomes {
                let _ = writeln!(
                    out,
                    "{:<9} [{}] {}: {}",
                    label(o.status),
                    o.suite,
                    o.name,
                    o.detail
                );
            }
            let fails = outcomes.iter().filter(|o| o.status == Status::Fail).count();
            let devs = outcomes
                .iter()
                .filter(|o| o.status == Status::ExpectedDeviation)
                .count();
            let _ = writeln!(
                out,
                "{} checks, {fails} failed, {devs} expected deviations",
                outcomes.len()
            );
            out
        }
    }
}
