//! One PASS/FAIL line per acceptance criterion. Exact comparisons only; the
//! runtime limits are wall-clock seconds for the whole criterion.
//!
//! Lines marked `known` restate a printed form that the source tables get
//! wrong; they are reported as FAIL but do not fail the run.

use std::process::ExitCode;
use std::time::Instant;

use fdalgebra::additive::{inverse_map_matrix, quasideterminant, ComplexAdditiveMap};
use fdalgebra::golden::OCTONION_INVERSE_MISPRINTS;
use fdalgebra::io::AdditiveSystem;
use fdalgebra::verify::{self, VerificationReport};
use fdalgebra::{solve_additive, Result};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[VerificationReport]) -> Outcome {
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        let passed: usize = reports.iter().map(|r| r.pass_count()).sum();
        let first = reports.iter().find_map(|r| r.first_failure());
        Outcome {
            pass: passed == total,
            detail: match first {
                None => format!("{passed}/{total} checks"),
                Some(c) => format!("{passed}/{total} checks; first failure `{}`: expected {} got {}", c.name, c.expected, c.actual),
            },
        }
    }
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit_secs: Option<f64>,
    known_failure: bool,
    run: fn() -> Result<Outcome>,
}

fn worked_system() -> Result<Outcome> {
    let sys = AdditiveSystem::parse(
        r#"{"algebra": "complex", "matrix": [["1", "2*I"], ["1", "-3"]], "rhs": ["1", "i"]}"#,
        None,
    )?;
    let x = solve_additive(&sys.matrix, &sys.rhs)?;
    let show = |f: &fdalgebra::LinearMap| ComplexAdditiveMap::from_linear_map(f).map(|c| c.to_string());
    let mut checks = VerificationReport::new("worked system");
    checks.push("z", "3/5 - 2i", x[0].to_string());
    checks.push("w", "1/5 - i", x[1].to_string());
    for (i, j, want) in [(0, 0, "1 + 2/3*I"), (1, 0, "1 + 3/2*I"), (0, 1, "3 + 2*I"), (1, 1, "-3 - 2*I")] {
        checks.push(format!("quasideterminant ({i}, {j})"), want, show(&quasideterminant(&sys.matrix, i, j)?)?);
    }
    let inv = inverse_map_matrix(&sys.matrix)?;
    for (i, j, want) in [(0, 0, "9/5 - 6/5*I"), (0, 1, "-4/5 + 6/5*I"), (1, 0, "3/5 - 2/5*I"), (1, 1, "-3/5 + 2/5*I")] {
        checks.push(format!("inverse ({i}, {j})"), want, show(inv.get(i, j))?);
    }
    Ok(Outcome::from_reports(&[checks]))
}

fn quaternion_tables() -> Result<Outcome> {
    let r = verify::quaternion_tables()?;
    let mut o = Outcome::from_reports(std::slice::from_ref(&r));
    let rows = r.checks.iter().filter(|c| c.name.starts_with("H co")).count();
    o.pass &= rows == 32;
    o.detail = format!("{rows} relations both ways + block form + 1/4 inverse; {}", o.detail);
    Ok(o)
}

fn octonion_tables() -> Result<Outcome> {
    let r = verify::octonion_tables()?;
    let forward = r.checks.iter().filter(|c| c.name.starts_with("O coordinates")).count();
    let inverse = r.checks.iter().filter(|c| c.name.starts_with("O components")).count();
    let mut o = Outcome::from_reports(&[r]);
    o.pass &= forward == 64 && inverse == 64;
    o.detail = format!(
        "{forward} forward and {inverse} inverse rows (catalogued misprints compared with the printed F^-1 form), F F^-1 = I with 1/12; {}",
        o.detail
    );
    Ok(o)
}

fn octonion_inverse_verbatim() -> Result<Outcome> {
    let diff = verify::octonion_inverse_differences()?;
    let catalogued = diff.len() == OCTONION_INVERSE_MISPRINTS.len()
        && OCTONION_INVERSE_MISPRINTS.iter().all(|p| diff.contains(p));
    Ok(Outcome {
        pass: diff.is_empty(),
        detail: format!(
            "{}/64 printed inverse rows verbatim; {} differ{}",
            64 - diff.len(),
            diff.len(),
            if catalogued { ", exactly the catalogued misprints" } else { ", NOT matching the catalogue" }
        ),
    })
}

fn conjugation() -> Result<Outcome> {
    let r = verify::conjugation_identities(100, 1)?;
    let mut o = Outcome::from_reports(&[r]);
    o.detail = format!("O diagonal -1/6, H diagonal -1/2, eight-term sums on 100 samples each; {}", o.detail);
    Ok(o)
}

fn conjugation_printed_form() -> Result<Outcome> {
    let good = verify::seven_term_agreement(100, 1)?;
    Ok(Outcome {
        pass: good == 100,
        detail: format!("printed sum without the (lz)l term holds on {good}/100 random octonions"),
    })
}

fn bases() -> Result<Outcome> {
    Ok(Outcome::from_reports(&[verify::representation_bases()?]))
}

fn properties() -> Result<Outcome> {
    let reports = [
        verify::teichmueller(200, 11)?,
        verify::shift_laws(200, 12)?,
        verify::quasideterminant_agreement(100, 13)?,
        verify::tensor_structure()?,
        verify::twisted_homomorphism(100, 14)?,
        verify::orbit_invariance(50, 15)?,
    ];
    Ok(Outcome::from_reports(&reports))
}

fn cauchy_riemann() -> Result<Outcome> {
    Ok(Outcome::from_reports(&[verify::cauchy_riemann(50, 16)?]))
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: "1", title: "worked additive system, quasideterminants and inverse", limit_secs: Some(1.0), known_failure: false, run: worked_system },
    Criterion { id: "2", title: "quaternion tables", limit_secs: None, known_failure: false, run: quaternion_tables },
    Criterion { id: "3", title: "octonion tables", limit_secs: Some(5.0), known_failure: false, run: octonion_tables },
    Criterion { id: "3-verbatim", title: "octonion inverse rows exactly as printed", limit_secs: None, known_failure: true, run: octonion_inverse_verbatim },
    Criterion { id: "4", title: "conjugation identities", limit_secs: None, known_failure: false, run: conjugation },
    Criterion { id: "4-printed", title: "octonion conjugation sum exactly as printed", limit_secs: None, known_failure: true, run: conjugation_printed_form },
    Criterion { id: "5", title: "representation bases and B ranks", limit_secs: None, known_failure: false, run: bases },
    Criterion { id: "6", title: "property suites", limit_secs: Some(30.0), known_failure: false, run: properties },
    Criterion { id: "7", title: "Cauchy-Riemann equations", limit_secs: None, known_failure: false, run: cauchy_riemann },
];

fn main() -> ExitCode {
    let mut unexpected = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)().unwrap_or_else(|e| Outcome { pass: false, detail: format!("error: {e}") });
        let secs = start.elapsed().as_secs_f64();
        let in_time = c.limit_secs.is_none_or(|l| secs < l);
        let pass = outcome.pass && in_time;
        let timing = match c.limit_secs {
            Some(l) => format!("{secs:.2} s, limit {l} s"),
            None => format!("{secs:.2} s"),
        };
        let tag = match (pass, c.known_failure) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("{tag} [{}] {}: {} ({timing})", c.id, c.title, outcome.detail);
        if !pass && !c.known_failure {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed");
        ExitCode::FAILURE
    }
}
