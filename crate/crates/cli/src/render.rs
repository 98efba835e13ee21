use std::fmt::Write as _;

use num_integer::Integer;
use serde_json::{json, Number, Value};
use torsym_core::bundle::{fixed_sublattice, TorusBundle};
use torsym_core::classify::is_symplectic;
use torsym_core::exactla::AbelianGroup;
use torsym_core::homology::{
    betti, h1_total_space, has_fiber_circle_action, trichotomy, Trichotomy,
};
use torsym_core::spectral::{e2_ranks, fiber_class_via_spectral};
use torsym_core::swcalc::{
    closed_form_applies, parity_sweep, sw4_zero_closed, sw4_zero_coset, sw4_zero_nonpullback,
    sw_poly_circle_bundle,
};
use torsym_core::BigInt;

use crate::{Failure, Format, IntRange, EXIT_INCONSISTENT, EXIT_OK};

pub(crate) struct Report {
    pub body: String,
    pub exit_code: i32,
}

impl Report {
    fn ok(body: String) -> Self {
        Report {
            body,
            exit_code: EXIT_OK,
        }
    }
}

fn big(x: &BigInt) -> Value {
    Value::Number(
        x.to_string()
            .parse::<Number>()
            .expect("integers are valid JSON numbers"),
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit(format: Format, text: String, value: Value) -> Report {
    match format {
        Format::Text => Report::ok(text),
        Format::Json => Report::ok(serde_json::to_string_pretty(&value).expect("serializable")),
    }
}

fn group_json(g: &AbelianGroup) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "invariant_factors": g.invariant_factors().iter().map(big).collect::<Vec<_>>(),
        "display": g.to_string(),
    })
}

fn trichotomy_name(t: Trichotomy) -> &'static str {
    match t {
        Trichotomy::TrivialBundle => "trivial bundle",
        Trichotomy::NontrivialWithCircleAction => "nontrivial monodromy with circle action",
        Trichotomy::NoCircleAction => "no circle action",
    }
}

pub(crate) fn classify(bundle: &TorusBundle, format: Format) -> Result<Report, Failure> {
    let report = is_symplectic(bundle)?;
    let value = json!({
        "b1": report.b1,
        "b2": report.b2,
        "has_circle_action": report.has_circle_action,
        "fiber_class_nonzero": report.fiber_class_nonzero,
        "symplectic": report.symplectic,
        "rationale": report.rationale.iter().map(|r| json!({
            "rule": r.rule,
            "citation": r.citation,
        })).collect::<Vec<_>>(),
        "cross_checks": {
            "betti_flat_twin": report.cross_checks.betti_flat_twin,
            "spectral": report.cross_checks.spectral,
        },
    });
    Ok(emit(format, report.to_string(), value))
}

pub(crate) fn homology(bundle: &TorusBundle, format: Format) -> Result<Report, Failure> {
    let h1 = h1_total_space(bundle);
    let (b1, b2) = betti(bundle);
    let case = trichotomy(bundle).ok();
    let fixed_rank = fixed_sublattice(bundle).rank();

    let mut text = String::new();
    writeln!(text, "H1: {h1}").unwrap();
    writeln!(text, "b1: {b1}").unwrap();
    writeln!(text, "b2: {b2}").unwrap();
    writeln!(text, "fixed lattice rank: {fixed_rank}").unwrap();
    writeln!(
        text,
        "circle action: {}",
        yes_no(has_fiber_circle_action(bundle))
    )
    .unwrap();
    match case {
        Some(t) => write!(text, "trichotomy: {}", trichotomy_name(t)).unwrap(),
        None => write!(text, "trichotomy: not applicable (euler class nonzero)").unwrap(),
    }

    let value = json!({
        "h1": group_json(&h1),
        "b1": b1,
        "b2": b2,
        "fixed_lattice_rank": fixed_rank,
        "has_circle_action": has_fiber_circle_action(bundle),
        "trichotomy": case.map(trichotomy_name),
    });
    Ok(emit(format, text, value))
}

pub(crate) fn spectral(bundle: &TorusBundle, format: Format) -> Result<Report, Failure> {
    let r = e2_ranks(bundle.genus(), bundle.monodromy())?;
    let verdict = fiber_class_via_spectral(bundle)?;
    let (_, b2) = betti(bundle);
    let rows = [
        [r.rank_e02, r.rank_e12, r.rank_e22],
        [r.rank_e01, r.rank_e11, r.rank_e21],
        [r.rank_e00, r.rank_e10, r.rank_e20],
    ];

    let mut text = String::new();
    writeln!(text, "E2 ranks (p = 0, 1, 2):").unwrap();
    for (q, row) in (0..3).rev().zip(&rows) {
        writeln!(text, "  q={q}: {} {} {}", row[0], row[1], row[2]).unwrap();
    }
    writeln!(text, "b2: {b2}").unwrap();
    writeln!(
        text,
        "b2 == rank E20 + rank E11 + rank E02: {} == {}",
        b2,
        r.rank_e20 + r.rank_e11 + r.rank_e02
    )
    .unwrap();
    write!(text, "fiber class nonzero: {}", yes_no(verdict)).unwrap();

    let value = json!({
        "e2_ranks": rows.iter().rev().map(|row| row.to_vec()).collect::<Vec<_>>(),
        "b2": b2,
        "fiber_class_nonzero": verdict,
    });
    Ok(emit(format, text, value))
}

pub(crate) fn swpoly(genus: usize, n: i64, format: Format) -> Result<Report, Failure> {
    let poly = sw_poly_circle_bundle(genus, n)?;
    let text = format!("SW(g={genus}, n={n}) = {poly}");
    let value = json!({
        "genus": genus,
        "n": n,
        "coefficients": poly.coefficients().iter().map(big).collect::<Vec<_>>(),
        "polynomial": poly.to_string(),
    });
    Ok(emit(format, text, value))
}

pub(crate) fn sw0(genus: usize, m: i64, n: i64, format: Format) -> Result<Report, Failure> {
    let coset = sw4_zero_coset(genus, m, n)?;
    let (closed, inner) = if closed_form_applies(m, n) {
        (
            Some(sw4_zero_closed(genus, m, n)?),
            Some(sw4_zero_nonpullback(genus, m, n)?),
        )
    } else {
        (None, None)
    };
    let agree = closed.as_ref().is_none_or(|c| c == &coset);

    let mut text = String::new();
    writeln!(text, "sw(0) = {coset}").unwrap();
    writeln!(text, "coset sum: {coset}").unwrap();
    match (&closed, &inner) {
        (Some(c), Some(i)) => {
            writeln!(text, "closed form: {c}").unwrap();
            writeln!(text, "non-pullback form: {i}").unwrap();
        }
        _ => {
            writeln!(text, "closed form: not available for n even and m odd").unwrap();
        }
    }
    writeln!(text, "even: {}", yes_no(coset.is_even())).unwrap();
    write!(text, "routes agree: {}", yes_no(agree)).unwrap();

    let value = json!({
        "genus": genus,
        "m": m,
        "n": n,
        "value": big(&coset),
        "coset": big(&coset),
        "closed": closed.as_ref().map(big),
        "nonpullback": inner.as_ref().map(big),
        "even": coset.is_even(),
        "agree": agree,
    });
    let mut report = emit(format, text, value);
    if !agree {
        report.exit_code = EXIT_INCONSISTENT;
    }
    Ok(report)
}

pub(crate) fn verify_parity(
    g: &IntRange,
    mn: &IntRange,
    format: Format,
) -> Result<Report, Failure> {
    if g.start < 2 {
        return Err(Failure::Input(format!(
            "genus range {g} must start at 2 or more"
        )));
    }
    let sweep = parity_sweep(
        g.start as usize..=g.end as usize,
        mn.start..=mn.end,
        mn.start..=mn.end,
    )?;

    let mut text = String::new();
    writeln!(text, "grid: g {g}, m {mn}, n {mn}").unwrap();
    writeln!(text, "cases: {}", sweep.cases).unwrap();
    writeln!(text, "skipped: {}", sweep.skipped).unwrap();
    writeln!(text, "closed-form checks: {}", sweep.closed_form_checks).unwrap();
    writeln!(text, "all even: {}", yes_no(sweep.all_even)).unwrap();
    write!(text, "counterexamples: {}", sweep.counterexamples.len()).unwrap();
    for c in &sweep.counterexamples {
        let closed = c
            .closed
            .as_ref()
            .map_or("n/a".to_string(), ToString::to_string);
        write!(
            text,
            "\n  g={} m={} n={}: coset {}, closed {closed}, {}",
            c.genus, c.m, c.n, c.coset, c.reason
        )
        .unwrap();
    }

    let value = json!({
        "g": [g.start, g.end],
        "mn": [mn.start, mn.end],
        "cases": sweep.cases,
        "skipped": sweep.skipped,
        "closed_form_checks": sweep.closed_form_checks,
        "all_even": sweep.all_even,
        "counterexamples": sweep.counterexamples.iter().map(|c| json!({
            "genus": c.genus,
            "m": c.m,
            "n": c.n,
            "coset": big(&c.coset),
            "closed": c.closed.as_ref().map(big),
            "reason": c.reason,
        })).collect::<Vec<_>>(),
    });
    let mut report = emit(format, text, value);
    if !sweep.counterexamples.is_empty() {
        report.exit_code = EXIT_INCONSISTENT;
    }
    Ok(report)
}
