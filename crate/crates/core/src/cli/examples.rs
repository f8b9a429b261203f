//! Built-in worked examples, runnable as `dehn examples KEY`.

use serde::Serialize;
use serde_json::json;

use super::{audit_text, Doc, ExampleArgs};
use crate::bounds::{self, FiniteType};
use crate::cable;
use crate::charvar::{self, ComponentIndex};
use crate::lattice::Slope;
use crate::pretzel;
use crate::seminorm::CullerShalenSeminorm;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExampleInfo {
    pub key: &'static str,
    pub summary: &'static str,
}

const CATALOG: &[ExampleInfo] = &[
    ExampleInfo { key: "free-product", summary: "components of the character variety of Z/p * Z/q and the reducible points on C(1,1) for the trefoil group" },
    ExampleInfo { key: "trefoil-bounds", summary: "trefoil seminorm and its finite and cyclic surgeries against the bounds" },
    ExampleInfo { key: "trefoil-reducible", summary: "surgery on the trefoil at slope 6 is reducible" },
    ExampleInfo { key: "cable-toroidal", summary: "cable on a D2(2,3,5) Seifert space: distance |k| between finite and toroidal fillings (--k, --m, --n)" },
    ExampleInfo { key: "cable-klein", summary: "(1,2) cable on the twisted I-bundle over the Klein bottle (--k)" },
    ExampleInfo { key: "pretzel-twist", summary: "twist numbers and the boundary slope of the K_m templates (--m)" },
    ExampleInfo { key: "pretzel-family", summary: "pretzel family K_{4n+6}: slope (16n^2+22n+1)/n for n = 3..10" },
];

pub fn list_examples() -> &'static [ExampleInfo] {
    CATALOG
}

pub(super) fn run_example(args: &ExampleArgs) -> Result<Doc> {
    let Some(key) = args.key.as_deref() else {
        let text: Vec<String> = CATALOG.iter().map(|e| format!("{:<7} {}", e.key, e.summary)).collect();
        return Ok(Doc::new(text.join("\n"), json!(CATALOG)));
    };
    match key {
        "free-product" => charvar_example(),
        "trefoil-bounds" => trefoil_bounds(),
        "trefoil-reducible" => {
            let r: Slope = "6".parse()?;
            let class = bounds::torus_knot_surgery(3, 2, &r)?;
            Ok(Doc::new(
                format!("trefoil, slope {r}: {class}"),
                json!({ "knot": [3, 2], "slope": r, "result": class, "result_text": class.to_string() }),
            ))
        }
        "cable-toroidal" => {
            let (k, m, n) = (args.k.unwrap_or(5), args.m.unwrap_or(1), args.n.unwrap_or(2));
            let r = cable::cable_toroidal(k, m, n)?;
            let text = format!(
                "({m},{n}) cable, k = {k}\n\
                 r1 = {} on T+, image {} on the Seifert piece, Δ(r1', φ1) = {}: essential vertical torus = {}\n\
                 r2 = {} on T+, image {}, Δ(r2', φ1) = {}: finite = {}\n\
                 Δ(r1, r2) = {}",
                r.r1, r.r1_image, r.r1_fiber_distance, r.r1_vertical_torus, r.r2, r.r2_image, r.r2_fiber_distance, r.r2_finite, r.distance
            );
            Ok(Doc::new(text, json!(r)))
        }
        "cable-klein" => {
            let k = args.k.unwrap_or(1);
            let r = cable::cable_klein(k);
            let text = format!(
                "k = {k}\nr1 = {}, Δ(r1, φ+) = {}\nr2 = {}, meridian image {}, Δ to the fiber = {}: finite = {}\n\
                 other fiber maps to {}\nΔ(r1, r2) = {}",
                r.r1, r.r1_fiber_distance, r.r2, r.r2_meridian_image, r.r2_fiber_distance, r.r2_finite, r.other_fiber_image, r.distance
            );
            Ok(Doc::new(text, json!(r)))
        }
        "pretzel-twist" => {
            let m = args.m.unwrap_or(10);
            let (ts, t0) = (pretzel::tau(&pretzel::km_candidate(m)?)?, pretzel::tau(&pretzel::km_seifert(m)?)?);
            let r = &ts - &t0;
            Ok(Doc::new(
                format!("K_{m}: tau(S) = {ts}, tau(S0) = {t0}, boundary slope {r}"),
                json!({ "m": m, "tau_s": ts.to_string(), "tau_s0": t0.to_string(), "slope": r.to_string() }),
            ))
        }
        "pretzel-family" => {
            let mut text = String::from("  n   m  slope      |H1|\n");
            let mut rows = Vec::new();
            for n in 3..=10 {
                let f = pretzel::pretzel_family(n)?;
                text.push_str(&format!("{:>3} {:>3}  {:<10} {}\n", f.n, f.m, f.slope.to_string(), f.h1_order));
                rows.push(f);
            }
            Ok(Doc::new(text, json!(rows)))
        }
        other => Err(Error::Parse(format!("unknown example {other:?}"))),
    }
}

fn charvar_example() -> Result<Doc> {
    let mut text = String::from("  p  q  components  curves\n");
    let mut counts = Vec::new();
    for p in 2..=5u64 {
        for q in p..=6u64 {
            let (t, c) = charvar::component_counts(p, q);
            text.push_str(&format!("{p:>3}{q:>3}  {t:>10}  {c:>6}\n"));
            counts.push(json!({ "p": p, "q": q, "components": t, "curves": c }));
        }
    }
    let ci = ComponentIndex::new(2, 3, 1, 1)?;
    let red = charvar::reducible_parameters(&ci)?;
    let crit = charvar::g1_critical_point(&ci)?;
    text.push_str(&format!(
        "C(1,1) of Z/2 * Z/3: reducible at a = {:.6}{:+.6}i and {:.6}{:+.6}i ({} character(s)); g1 critical at {:.6}{:+.6}i\n",
        red.values[0].re, red.values[0].im, red.values[1].re, red.values[1].im, red.characters, crit.re, crit.im
    ));
    Ok(Doc::new(
        text,
        json!({
            "counts": counts,
            "reducible": red.values.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            "reducible_characters": red.characters,
            "g1_critical_point": [crit.re, crit.im],
        }),
    ))
}

fn trefoil_bounds() -> Result<Doc> {
    let sn = CullerShalenSeminorm::from_coefficients(&[(1, -6)]);
    let claims = bounds::torus_knot_claims(3, 2, 100, 10, 1, 1)?;
    let report = bounds::audit_fillings(&sn, &claims);
    let mut text = format!("trefoil: {}, s = {}\n", sn.classify().name(), sn.minimal_value());
    let mut rows = Vec::new();
    for c in &claims {
        let class = bounds::torus_knot_surgery(3, 2, &c.slope)?;
        rows.push(json!({ "slope": c.slope, "type": c.finite_type, "class": class.to_string() }));
    }
    let by_type: Vec<String> = FiniteType::ALL
        .iter()
        .map(|t| format!("{t}: {}", claims.iter().filter(|c| c.finite_type == *t).count()))
        .collect();
    text.push_str(&format!("finite or cyclic slopes by type: {}\n", by_type.join(", ")));
    text.push_str(&audit_text(&report, claims.len()));
    Ok(Doc::new(text, json!({ "claims": rows, "audit": report })))
}
