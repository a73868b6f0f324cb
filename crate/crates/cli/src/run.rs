use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::Instant;

use num_complex::Complex64;
use tbk_core::algebra::is_squarefree;
use tbk_core::ford::{
    build_relation_fixture, eight_eleven_factor, enumerate_spheres, ford_pattern, render_svg,
    representation_lattice, shimizu_scan, verify_relations,
};
use tbk_core::prep::{
    detect_factors, find_roots, longitude_entry, longitude_entry_exact, prep_polynomial,
    ParabolicPair,
};
use tbk_core::twobridge::{exponent_sequence, longitude_word, relator_word};
use tbk_core::{IntPolynomial, PrepReport, TwoBridgeForm};

use crate::report::*;
use crate::request::{CommandRequest, Options, SubcommandKind};
use crate::CliError;

/// Exit status of a successful run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub status: Status,
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        stdout,
        status: Status::Ok,
    }
}

fn form_strings(f: &TwoBridgeForm) -> [String; 2] {
    [f.alpha().to_string(), f.beta().to_string()]
}

fn c(z: Complex64) -> String {
    let fixed = |x: f64| {
        let s = format!("{x:.12}");
        match s.strip_prefix('-') {
            Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
            _ => s,
        }
    };
    let im = fixed(z.im);
    let sign = if im.starts_with('-') { "" } else { "+" };
    format!("{}{sign}{im}i", fixed(z.re))
}

fn require_form(req: &CommandRequest) -> TwoBridgeForm {
    req.form
        .unwrap_or_else(|| unreachable!("{} is validated to carry a form", req.subcommand.name()))
}

/// The polynomial whose roots `--root` indexes: the factor if given (after
/// checking it divides Lambda), otherwise Lambda.
fn root_source(form: &TwoBridgeForm, o: &Options) -> Result<IntPolynomial, CliError> {
    let lambda = prep_polynomial(form)?.lambda;
    match &o.factor {
        Some(f) => {
            let dr = lambda.divrem(f).map_err(tbk_core::prep::PrepError::from)?;
            if !dr.remainder.is_zero() {
                return Err(CliError::NotAFactor {
                    factor: f.to_string(),
                    form: *form,
                });
            }
            Ok(f.clone())
        }
        None => Ok(lambda),
    }
}

fn pick(roots: &[Complex64], index: usize) -> Result<Complex64, CliError> {
    roots
        .get(index.wrapping_sub(1))
        .copied()
        .ok_or(CliError::RootIndex {
            index,
            count: roots.len(),
        })
}

pub fn run_report(req: &CommandRequest) -> Result<Outcome, CliError> {
    let o = &req.options;
    match req.subcommand {
        SubcommandKind::Word => word(require_form(req), o),
        SubcommandKind::Prep => prep(require_form(req), o),
        SubcommandKind::Roots => roots(require_form(req), o),
        SubcommandKind::Factors => factors(require_form(req), o),
        SubcommandKind::Longitude => longitude(require_form(req), o),
        SubcommandKind::Ford => ford(require_form(req), o),
        SubcommandKind::Shimizu => shimizu(req.form, o),
        SubcommandKind::Verify811 => verify(o),
        SubcommandKind::Report => report(require_form(req), o),
    }
}

fn word(form: TwoBridgeForm, o: &Options) -> Result<Outcome, CliError> {
    let eps = exponent_sequence(&form);
    let l = longitude_word(&form);
    let doc = WordDocument {
        form: form_strings(&form),
        exponents: eps.signs().to_vec(),
        relator: relator_word(&form).to_string(),
        longitude: l.word.to_string(),
        sigma: l.sigma,
    };
    if o.json {
        return Ok(ok(to_json(&doc)));
    }
    let signs: Vec<&str> = doc
        .exponents
        .iter()
        .map(|&e| if e > 0 { "+" } else { "-" })
        .collect();
    Ok(ok(format!(
        "form {form}\nexponents: {}\nrelator: {}\nlongitude: {}\nsigma: {}",
        signs.join(" "),
        doc.relator,
        doc.longitude,
        doc.sigma
    )))
}

fn prep(form: TwoBridgeForm, o: &Options) -> Result<Outcome, CliError> {
    let p = prep_polynomial(&form)?;
    let doc = PrepDocument {
        form: form_strings(&form),
        lambda: coeff_strings(&p.lambda),
        degree: p.degree(),
        squarefree: is_squarefree(&p.lambda),
    };
    if o.json {
        return Ok(ok(to_json(&doc)));
    }
    Ok(ok(format!(
        "Lambda(u) = {}\ncoefficients: {}\ndegree: {}\nsquarefree: {}",
        p.lambda.pretty(),
        p.lambda,
        doc.degree,
        doc.squarefree
    )))
}

fn roots(form: TwoBridgeForm, o: &Options) -> Result<Outcome, CliError> {
    let p = root_source(&form, o)?;
    let rs = find_roots(&p)?;
    let doc = RootsDocument {
        polynomial: coeff_strings(&p),
        roots: rs
            .iter()
            .map(|(z, residual)| {
                let z = ComplexValue::from(z);
                RootEntry {
                    re: z.re,
                    im: z.im,
                    residual,
                }
            })
            .collect(),
    };
    if o.json {
        return Ok(ok(to_json(&doc)));
    }
    let mut s = format!("roots of {}", p.pretty());
    for (i, (z, r)) in rs.iter().enumerate() {
        let _ = write!(s, "\n{:>3}  {}  residual {r:.1e}", i + 1, c(z));
    }
    Ok(ok(s))
}

fn factors(form: TwoBridgeForm, o: &Options) -> Result<Outcome, CliError> {
    let p = prep_polynomial(&form)?;
    let classes = detect_factors(&p)?;
    let doc = FactorsDocument {
        form: form_strings(&form),
        classes: classes.iter().map(class_entry).collect(),
    };
    if o.json {
        return Ok(ok(to_json(&doc)));
    }
    let mut s = format!("Lambda(u) = {}", p.lambda.pretty());
    for cl in &classes {
        let g = match cl.g_constant() {
            Some(g) => format!("g = {g}"),
            None => match &cl.g_residue {
                Some(r) => format!("g = {} mod factor", r.pretty()),
                None => "g not constant".into(),
            },
        };
        let _ = write!(s, "\nfactor {}  ({})  {g}", cl.factor, cl.factor.pretty());
        for (z, g) in cl.roots.iter().zip(&cl.longitude_entries) {
            let _ = write!(s, "\n    omega = {}  g = {}", c(*z), c(*g));
        }
    }
    Ok(ok(s))
}

fn longitude(form: TwoBridgeForm, o: &Options) -> Result<Outcome, CliError> {
    let p = root_source(&form, o)?;
    let all = find_roots(&p)?.roots;
    let chosen: Vec<(usize, Complex64)> = match o.root {
        Some(i) => vec![(i, pick(&all, i)?)],
        None => all
            .iter()
            .copied()
            .enumerate()
            .map(|(i, z)| (i + 1, z))
            .collect(),
    };
    let mut entries = Vec::new();
    for (index, omega) in chosen {
        let g = longitude_entry(&form, omega)?;
        entries.push(LongitudeEntry {
            index,
            omega: omega.into(),
            g: g.into(),
            g_abs: g.norm(),
        });
    }
    let residue = match &o.factor {
        Some(f) => Some(longitude_entry_exact(&form, f)?),
        None => None,
    };
    let doc = LongitudeDocument {
        form: form_strings(&form),
        entries,
        g_residue: residue.as_ref().map(coeff_strings),
    };
    if o.json {
        return Ok(ok(to_json(&doc)));
    }
    let mut s = format!("longitude entries for {form}");
    for e in &doc.entries {
        let omega = Complex64::new(e.omega.re, e.omega.im);
        let g = Complex64::new(e.g.re, e.g.im);
        let _ = write!(
            s,
            "\n{:>3}  omega = {}  g = {}  |g| = {:.12}",
            e.index,
            c(omega),
            c(g),
            e.g_abs
        );
    }
    if let Some(r) = residue {
        let _ = write!(
            s,
            "\nexact g = {} mod {}",
            r.pretty(),
            o.factor
                .as_ref()
                .map(IntPolynomial::pretty)
                .unwrap_or_default()
        );
    }
    Ok(ok(s))
}

fn ford(form: TwoBridgeForm, o: &Options) -> Result<Outcome, CliError> {
    let p = root_source(&form, o)?;
    let index = o.root.unwrap_or(1);
    let omega = pick(&find_roots(&p)?.roots, index)?;
    let lattice = representation_lattice(&form, omega)?;
    let spheres = enumerate_spheres(&form, omega, o.depth)?;
    let pattern = ford_pattern(&spheres, &lattice, o.samples)?;
    if let Some(path) = &o.svg {
        std::fs::write(path, render_svg(&pattern, &lattice)).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    let doc = FordDocument {
        form: form_strings(&form),
        omega: omega.into(),
        t1: lattice.t1.into(),
        t2: lattice.t2.into(),
        degenerate: lattice.degenerate,
        coverage: pattern.coverage,
        samples: pattern.samples,
        spheres: pattern
            .spheres
            .iter()
            .enumerate()
            .map(|(i, sp)| SphereEntry {
                label: sp.label.to_string(),
                aliases: sp.aliases.iter().map(ToString::to_string).collect(),
                center: sp.center.into(),
                radius: sp.radius,
                visible_fraction: pattern.visible_measure(i) / std::f64::consts::TAU,
            })
            .collect(),
        svg: o.svg.as_ref().map(|p| p.display().to_string()),
    };
    if o.json {
        return Ok(ok(to_json(&doc)));
    }
    let mut s = format!(
        "omega = {}\nlattice: t1 = {}, t2 = {}{}\nspheres: {}, coverage {:.4}",
        c(omega),
        c(lattice.t1),
        c(lattice.t2),
        if lattice.degenerate {
            " (degenerate)"
        } else {
            ""
        },
        doc.spheres.len(),
        doc.coverage
    );
    for sp in &doc.spheres {
        let _ = write!(
            s,
            "\n  {:<40} center {}  radius {:.9}  visible {:.3}",
            sp.label,
            c(Complex64::new(sp.center.re, sp.center.im)),
            sp.radius,
            sp.visible_fraction
        );
    }
    if let Some(path) = &doc.svg {
        let _ = write!(s, "\nsvg written to {path}");
    }
    Ok(ok(s))
}

fn shimizu(form: Option<TwoBridgeForm>, o: &Options) -> Result<Outcome, CliError> {
    let omega = match (o.omega, form) {
        (Some(z), _) => z,
        (None, Some(form)) => {
            let p = root_source(&form, o)?;
            pick(&find_roots(&p)?.roots, o.root.unwrap_or(1))?
        }
        (None, None) => unreachable!("validated: shimizu has a form or --omega"),
    };
    let pair = ParabolicPair::numeric(omega);
    let w = shimizu_scan(&pair.a, &pair.b, o.max_len);
    let doc = ShimizuDocument {
        omega: omega.into(),
        max_len: o.max_len,
        witness: w.as_ref().map(|w| w.word.to_string()),
        c_abs: w.as_ref().map(|w| w.c_abs),
    };
    if o.json {
        return Ok(ok(to_json(&doc)));
    }
    Ok(ok(match w {
        Some(w) => format!(
            "omega = {}\nwitness: {} with |c| = {:.12} (not discrete)",
            c(omega),
            w.word,
            w.c_abs
        ),
        None => format!(
            "omega = {}\nno witness through length {}",
            c(omega),
            o.max_len
        ),
    }))
}

fn verify(o: &Options) -> Result<Outcome, CliError> {
    let f = eight_eleven_factor();
    let report = verify_relations(&build_relation_fixture(&f)?);
    let status = if report.all_hold() {
        Status::Ok
    } else {
        Status::VerificationFailed
    };
    let stdout = if o.json {
        to_json(&VerifyDocument {
            factor: coeff_strings(&f),
            checks: report
                .checks
                .iter()
                .map(|c| (c.name.to_string(), c.holds))
                .collect(),
            all_hold: report.all_hold(),
        })
    } else {
        let mut s = format!("relations modulo {}", f.pretty());
        for ch in &report.checks {
            let _ = write!(
                s,
                "\n{}  {}",
                if ch.holds { "PASS" } else { "FAIL" },
                ch.name
            );
        }
        s
    };
    Ok(Outcome { stdout, status })
}

fn report(form: TwoBridgeForm, o: &Options) -> Result<Outcome, CliError> {
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut BTreeMap<String, f64>| {
        if o.timings {
            timings.insert(name.to_string(), clock.elapsed().as_secs_f64() * 1e3);
        }
        clock = Instant::now();
    };
    let p = prep_polynomial(&form)?;
    lap("prep_polynomial", &mut timings);
    let roots = find_roots(&p.lambda)?;
    lap("find_roots", &mut timings);
    let classes = detect_factors(&p)?;
    lap("detect_factors", &mut timings);
    let r = PrepReport {
        form,
        lambda: p.lambda,
        roots,
        classes,
    };
    let doc = ReportDocument::from_report(&r, timings);
    if o.json {
        return Ok(ok(doc.to_json()));
    }
    let mut s = format!(
        "form {form}\nLambda(u) = {}\nroots: {}\nclasses: {}",
        r.lambda.pretty(),
        doc.roots.len(),
        doc.classes.len()
    );
    for cl in &doc.classes {
        let _ = write!(
            s,
            "\n  factor {}  g = {}",
            cl.factor.join(","),
            cl.g_exact.as_deref().unwrap_or("(not an integer)")
        );
    }
    for (stage, ms) in &doc.timings {
        let _ = write!(s, "\n{stage}: {ms:.3} ms");
    }
    Ok(ok(s))
}
