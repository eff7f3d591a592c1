//! The four command drivers.  Each renders its report into a string and an
//! exit code so the binary stays a thin shell and tests can call straight in.
//!
//! Exit codes: `0` success, `2` failed check or value mismatch (and any
//! computational dead end, like a non-isolated singularity), `3` exceeded
//! resource limits, `4` unreadable or unparseable input.

use crate::corpus::{self, Verdict};
use crate::document::{descriptor_of, parse_document, Document};
use crate::render::{invariant_human, invariant_machine, machine_header, yes_no};
use eids_core::eids::{
    check_determinantal, stratification, verify_essential_isolation, EidsDescriptor,
    StratificationReport, TypeCheckReport,
};
use eids_core::error::{Error, Result};
use eids_core::invariants::{
    milnor_hypersurface, multiplicity_m0, nu_with_md, tjurina_hypersurface, InvariantName,
    InvariantReport,
};
use eids_core::limits::{ResourceLimits, DEFAULT_MAX_WORK};
use eids_core::obstruction::{eu_dispatch, DispatchOptions};

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub max_degree: u32,
    pub max_basis: usize,
    pub max_work: u64,
    pub machine: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            seed: 0,
            max_degree: 60,
            max_basis: 5000,
            max_work: DEFAULT_MAX_WORK,
            machine: false,
        }
    }
}

impl RunConfig {
    /// A fresh meter for one top-level computation.
    pub fn limits(&self) -> ResourceLimits {
        ResourceLimits::new(self.max_degree, self.max_basis, self.max_work)
    }
}

/// A rendered report plus the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub exit: i32,
}

fn outcome(lines: Vec<String>, exit: i32) -> Outcome {
    Outcome { stdout: lines.join("\n") + "\n", exit }
}

/// Exit code for an error that escaped a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::UnknownVariable(_)
        | Error::Descriptor(_)
        | Error::NotAGerm => 4,
        Error::ResourceLimit(_) => 3,
        _ => 2,
    }
}

fn parse_input(text: &str) -> Result<(Document, EidsDescriptor)> {
    let doc = parse_document(text)?;
    let (_ctx, x) = descriptor_of(&doc)?;
    Ok((doc, x))
}

/// `check`: verify the determinantal type and report the stratification.
pub fn run_check(text: &str, file: &str, cfg: &RunConfig) -> Result<Outcome> {
    let (_doc, x) = parse_input(text)?;
    let report = check_determinantal(&x, &cfg.limits())?;
    let strat = stratification(&x, &cfg.limits())?;
    let isolation = match verify_essential_isolation(&x, &cfg.limits()) {
        Ok(b) => Some(b),
        Err(Error::ResourceLimit(_)) => None,
        Err(e) => return Err(e),
    };
    let exit = if report.is_determinantal { 0 } else { 2 };
    let lines = if cfg.machine {
        check_machine(file, cfg, &x, &report, &strat, isolation)
    } else {
        check_human(file, cfg, &x, &report, &strat, isolation)
    };
    Ok(outcome(lines, exit))
}

fn dim_of(x: &EidsDescriptor, report: &TypeCheckReport) -> usize {
    x.ambient_dim() - report.codim_actual
}

fn sigma_icis_text(x: &EidsDescriptor, report: &TypeCheckReport) -> &'static str {
    match report.sigma_is_icis {
        Some(true) => "yes",
        Some(false) => "no",
        None if x.t() < 2 => "n/a",
        None => "unknown",
    }
}

fn isolation_text(isolation: Option<bool>) -> &'static str {
    match isolation {
        Some(true) => "verified",
        Some(false) => "failed",
        None => "unknown",
    }
}

fn check_human(
    file: &str,
    cfg: &RunConfig,
    x: &EidsDescriptor,
    report: &TypeCheckReport,
    strat: &StratificationReport,
    isolation: Option<bool>,
) -> Vec<String> {
    let mut lines = vec![format!("check {file} (seed {})", cfg.seed)];
    lines.push(format!(
        "matrix: {}x{}, rank bound t = {}, ambient dim {}",
        x.nrows(),
        x.ncols(),
        x.t(),
        x.ambient_dim()
    ));
    lines.push(format!(
        "{} ({},{},{}), dim {}, IDS: {}, smoothable: {}",
        if report.is_determinantal { "determinantal" } else { "not determinantal" },
        x.nrows(),
        x.ncols(),
        x.t(),
        dim_of(x, report),
        yes_no(report.is_ids),
        yes_no(report.is_smoothable),
    ));
    lines.push(format!(
        "codimension: expected {}, actual {}",
        report.codim_expected, report.codim_actual
    ));
    lines.push(format!("corank at origin: {}", report.corank));
    lines.push(format!(
        "three-strata bound: {}",
        if report.three_strata_ok { "satisfied" } else { "exceeded" }
    ));
    lines.push(format!("singular set ICIS: {}", sigma_icis_text(x, report)));
    lines.push(format!("essential isolation: {}", isolation_text(isolation)));
    lines.push("strata:".to_string());
    for s in &strat.strata {
        let dim = match s.dim {
            Some(d) => format!("dim {d}"),
            None => "empty".to_string(),
        };
        lines.push(format!(
            "  rank < {}: {dim}, expected codim {}",
            s.index, s.expected_codim
        ));
    }
    lines.push(format!(
        "check: {}",
        if report.is_determinantal { "passed" } else { "failed" }
    ));
    lines
}

fn check_machine(
    file: &str,
    cfg: &RunConfig,
    x: &EidsDescriptor,
    report: &TypeCheckReport,
    strat: &StratificationReport,
    isolation: Option<bool>,
) -> Vec<String> {
    let mut lines = machine_header("check", Some(file), cfg.seed);
    lines.push(format!("matrix-rows: {}", x.nrows()));
    lines.push(format!("matrix-cols: {}", x.ncols()));
    lines.push(format!("rank-bound: {}", x.t()));
    lines.push(format!("ambient-dim: {}", x.ambient_dim()));
    lines.push(format!("codim-expected: {}", report.codim_expected));
    lines.push(format!("codim-actual: {}", report.codim_actual));
    lines.push(format!("dim: {}", dim_of(x, report)));
    lines.push(format!("determinantal: {}", yes_no(report.is_determinantal)));
    lines.push(format!("ids: {}", yes_no(report.is_ids)));
    lines.push(format!("smoothable: {}", yes_no(report.is_smoothable)));
    lines.push(format!("three-strata: {}", yes_no(report.three_strata_ok)));
    lines.push(format!("corank: {}", report.corank));
    lines.push(format!("sigma-icis: {}", sigma_icis_text(x, report)));
    lines.push(format!("essential-isolation: {}", isolation_text(isolation)));
    for s in &strat.strata {
        let dim = match s.dim {
            Some(d) => d.to_string(),
            None => "-".to_string(),
        };
        lines.push(format!(
            "stratum: index={} dim={dim} expected-codim={} empty={}",
            s.index,
            s.expected_codim,
            yes_no(s.is_empty)
        ));
    }
    lines.push(format!(
        "status: {}",
        if report.is_determinantal { "ok" } else { "check-failed" }
    ));
    lines
}

/// `invariants`: compute every invariant the presentation supports.
pub fn run_invariants(text: &str, file: &str, cfg: &RunConfig) -> Result<Outcome> {
    let (doc, x) = parse_input(text)?;
    let d = x.expected_dim();
    let n = x.ambient_dim();
    let hypersurface = x.nrows() == 1 && x.ncols() == 1 && x.t() == 1;
    let smooth_bound = (x.nrows() - x.t() + 2) * (x.ncols() - x.t() + 2);

    let m0 = multiplicity_m0(&x.defining_ideal(), d, cfg.seed, &cfg.limits())?;
    let mut mu: Option<InvariantReport> = None;
    let mut tau: Option<InvariantReport> = None;
    let mut md_nu: Option<(InvariantReport, InvariantReport)> = None;

    if hypersurface {
        let g = x.matrix().entry(0, 0);
        let m = milnor_hypersurface(g, &cfg.limits())?;
        let t = tjurina_hypersurface(g, &cfg.limits())?;
        mu = Some(InvariantReport::computed(
            InvariantName::Mu,
            m as i64,
            cfg.seed,
            "jacobian colength",
        ));
        tau = Some(InvariantReport::computed(
            InvariantName::Tau,
            t as i64,
            cfg.seed,
            "tjurina algebra colength",
        ));
    }
    if d > 0 && n < smooth_bound {
        match nu_with_md(&x, cfg.seed, &cfg.limits()) {
            Ok((nu, md)) => {
                if !hypersurface && d == 2 {
                    // For a smoothable determinantal surface the vanishing
                    // characteristic and the Milnor number coincide.
                    mu = Some(InvariantReport::computed(
                        InvariantName::Mu,
                        nu,
                        cfg.seed,
                        "essential smoothing",
                    ));
                }
                md_nu = Some((
                    InvariantReport::computed(
                        InvariantName::Md,
                        md as i64,
                        cfg.seed,
                        "polar multiplicity",
                    ),
                    InvariantReport::computed(
                        InvariantName::Nu,
                        nu,
                        cfg.seed,
                        "polar recursion",
                    ),
                ));
            }
            Err(Error::NotSmoothable(_)) => {}
            Err(e) => return Err(e),
        }
    }

    let mut reports = vec![InvariantReport::computed(
        InvariantName::M0,
        m0 as i64,
        cfg.seed,
        "generic section colength",
    )];
    reports.extend(mu);
    reports.extend(tau);
    if let Some((md, nu)) = md_nu {
        reports.push(md);
        reports.push(nu);
    }
    reports.extend(doc.supplied.iter().cloned());

    let mut lines = if cfg.machine {
        machine_header("invariants", Some(file), cfg.seed)
    } else {
        vec![format!("invariants {file} (seed {})", cfg.seed)]
    };
    for rep in &reports {
        lines.push(if cfg.machine { invariant_machine(rep) } else { invariant_human(rep) });
    }
    if cfg.machine {
        lines.push("status: ok".to_string());
    }
    Ok(outcome(lines, 0))
}

/// `eu`: run the obstruction dispatcher and report the consumed inputs.
pub fn run_eu(text: &str, file: &str, cfg: &RunConfig) -> Result<Outcome> {
    let (doc, x) = parse_input(text)?;
    match eu_dispatch(&x, cfg.seed, &doc.supplied, &DispatchOptions::default(), &cfg.limits()) {
        Ok(r) => {
            let mut lines = if cfg.machine {
                let mut l = machine_header("eu", Some(file), cfg.seed);
                l.push(format!("eu: {}", r.value));
                l.push(format!("regime: {}", r.regime.as_str()));
                l
            } else {
                vec![
                    format!("eu {file} (seed {})", cfg.seed),
                    format!("eu = {} [regime: {}]", r.value, r.regime.as_str()),
                ]
            };
            if !cfg.machine && !r.inputs.is_empty() {
                lines.push("inputs:".to_string());
            }
            for rep in &r.inputs {
                lines.push(if cfg.machine {
                    invariant_machine(rep)
                } else {
                    invariant_human(rep)
                });
            }
            if cfg.machine {
                lines.push("status: ok".to_string());
            }
            Ok(outcome(lines, 0))
        }
        Err(Error::MissingInput(name)) => {
            let hints = corpus::rows_matching(&doc);
            let mut lines = if cfg.machine {
                machine_header("eu", Some(file), cfg.seed)
            } else {
                vec![format!("eu {file} (seed {})", cfg.seed)]
            };
            if cfg.machine {
                lines.push("status: error".to_string());
                lines.push(format!(
                    "error: missing input: invariant `{name}` must be supplied"
                ));
                for id in &hints {
                    lines.push(format!("hint-row: {id}"));
                }
            } else {
                lines.push(format!(
                    "error: missing input: invariant `{name}` must be supplied"
                ));
                if hints.is_empty() {
                    lines.push(format!(
                        "hint: add `supplied: {name} = <value>` to the document"
                    ));
                } else {
                    for id in &hints {
                        lines.push(format!(
                            "hint: bundled example row {id} matches this matrix and records \
                             a value for `{name}`"
                        ));
                    }
                }
            }
            Ok(outcome(lines, 2))
        }
        Err(e) => Err(e),
    }
}

/// `corpus-run`: execute the bundled tables and compare against the
/// published obstruction column.
pub fn run_corpus(only: Option<&str>, cfg: &RunConfig) -> Outcome {
    let outcomes = corpus::run_rows(only, cfg);
    let mut lines = if cfg.machine {
        machine_header("corpus-run", None, cfg.seed)
    } else {
        vec![format!("corpus-run (seed {})", cfg.seed)]
    };
    let (mut matches, mut supplied, mut mismatches, mut skipped) = (0u32, 0u32, 0u32, 0u32);
    for o in &outcomes {
        match o.verdict {
            Verdict::Match => matches += 1,
            Verdict::SuppliedMatch => supplied += 1,
            Verdict::Mismatch => mismatches += 1,
            _ => skipped += 1,
        }
        if cfg.machine {
            let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
            let mut line = format!(
                "entry: id={} label={} params={} expected={} got={} verdict={}",
                o.id,
                o.label.as_deref().unwrap_or("-"),
                o.params,
                opt(o.expected),
                opt(o.got),
                o.verdict.as_str(),
            );
            if let Some(note) = &o.note {
                line.push_str(&format!(" note={note}"));
            }
            lines.push(line);
            for rep in &o.inputs {
                lines.push(format!(
                    "entry-input: id={} params={} {}",
                    o.id,
                    o.params,
                    crate::render::invariant_tokens(rep)
                ));
            }
        } else {
            let mut head = o.id.clone();
            if let Some(label) = &o.label {
                head.push_str(&format!(" {label}"));
            }
            if o.params != "-" {
                head.push_str(&format!(" [{}]", o.params));
            }
            let body = match (o.expected, o.got) {
                (Some(e), Some(g)) => format!("expected {e}, got {g}, {}", o.verdict.as_str()),
                (Some(e), None) => format!("expected {e}, {}", o.verdict.as_str()),
                _ => o.verdict.as_str().to_string(),
            };
            let mut line = format!("{head}: {body}");
            if let Some(note) = &o.note {
                line.push_str(&format!(": {note}"));
            }
            lines.push(line);
        }
    }
    if cfg.machine {
        lines.push(format!(
            "summary: match={matches} supplied-match={supplied} mismatch={mismatches} \
             skipped={skipped}"
        ));
        lines.push(format!(
            "status: {}",
            if mismatches == 0 { "ok" } else { "mismatch" }
        ));
    } else {
        lines.push(format!(
            "summary: {matches} MATCH, {supplied} SUPPLIED-MATCH, {mismatches} MISMATCH, \
             {skipped} SKIPPED"
        ));
    }
    outcome(lines, if mismatches == 0 { 0 } else { 2 })
}
