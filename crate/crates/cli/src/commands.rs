use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use laglab_core::report::{csv_summary, fmt_sig17, json_lines, SCHEMA_VERSION};
use laglab_core::verify::{
    check_support_bound, check_theorem_inequality, delta_bound_from_report, delta_range, sweep,
    verify_cell, ConfigurationSpec, DeltaBoundCheck, Family, InequalityCheck, SupportBoundCheck,
    VerificationReport, VerifyOptions,
};
use laglab_core::{binomial, enumerate_left_compressed, lagrangian, LagrangianResult, SolverOptions};
use serde::Serialize;

use crate::args::{Common, Format};
use crate::source;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NUMERIC: u8 = 2;
pub const EXIT_INCOMPLETE: u8 = 3;

pub fn solver_options(c: &Common) -> SolverOptions {
    let mut o = SolverOptions {
        seed: c.seed,
        ..SolverOptions::default()
    };
    if let Some(tol) = c.tol {
        o.value_tol = tol;
    }
    if let Some(k) = c.kkt_tol {
        o.kkt_tol = k;
    }
    if let Some(s) = c.starts {
        o.starts = s as usize;
    }
    o
}

/// Write to `--out` when given, stdout otherwise.
fn emit(c: &Common, text: &str) -> Result<()> {
    match &c.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("reports serialize");
    s.push('\n');
    s
}

fn weights(w: &[f64]) -> String {
    w.iter().map(|&x| fmt_sig17(x)).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct ComputeReport<'a> {
    schema: u32,
    source: &'a str,
    r: usize,
    n: u32,
    m: usize,
    #[serde(flatten)]
    result: &'a LagrangianResult,
}

pub fn compute(c: &Common, src: &str, r: Option<usize>) -> Result<u8> {
    let g = source::load(src, r)?;
    let res = lagrangian(&g, &solver_options(c));
    let text = match c.format {
        Format::Json => json(&ComputeReport {
            schema: SCHEMA_VERSION,
            source: src,
            r: g.r(),
            n: g.n(),
            m: g.m(),
            result: &res,
        }),
        Format::Csv => format!(
            "r,n,m,value,support,kkt_residual,method,certified\n{},{},{},{},{},{},{},{}\n",
            g.r(),
            g.n(),
            g.m(),
            fmt_sig17(res.value),
            res.support,
            fmt_sig17(res.kkt_residual),
            serde_json::to_value(res.method).expect("method").as_str().unwrap_or_default(),
            res.certified
        ),
        Format::Text => format!(
            "graph: r = {}, n = {}, m = {}\nvalue: {}\nweighting: {}\nsupport: {}\nkkt_residual: {}\ncertified: {}\n",
            g.r(),
            g.n(),
            g.m(),
            fmt_sig17(res.value),
            weights(res.weighting.as_slice()),
            res.support,
            fmt_sig17(res.kkt_residual),
            res.certified
        ),
    };
    emit(c, &text)?;
    Ok(if res.certified { EXIT_OK } else { EXIT_NUMERIC })
}

fn report_text(r: &VerificationReport) -> String {
    format!(
        "t={} m={} a={} colex={} max={} gap={} graphs={} witnesses={} {}{}\n",
        r.t,
        r.m,
        r.a.map(|a| a.to_string()).unwrap_or_default(),
        fmt_sig17(r.colex_value),
        fmt_sig17(r.max_value),
        fmt_sig17(r.gap),
        r.graph_count,
        r.witnesses.len(),
        if r.all_pass { "pass" } else { "FAIL" },
        if r.partial { " (partial)" } else { "" }
    )
}

fn exit_for(reports: &[VerificationReport]) -> u8 {
    let partial: Vec<String> = reports
        .iter()
        .filter(|r| r.partial)
        .map(|r| format!("({}, {})", r.t, r.m))
        .collect();
    if !partial.is_empty() {
        eprintln!("incomplete cells: {}", partial.join(" "));
        return EXIT_INCOMPLETE;
    }
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.all_pass)
        .map(|r| format!("({}, {})", r.t, r.m))
        .collect();
    if !failed.is_empty() {
        eprintln!("failed cells: {}", failed.join(" "));
        return EXIT_NUMERIC;
    }
    EXIT_OK
}

pub fn run_sweep(c: &Common, t_max: u32, max_graphs: Option<usize>) -> Result<u8> {
    let opts = VerifyOptions {
        solver: solver_options(c),
        max_graphs,
    };
    let reports = sweep(t_max, &opts)?;
    if let Some(dir) = &c.out {
        write_sweep_dir(dir, &reports)?;
    }
    let text = match c.format {
        Format::Json => json_lines(&reports),
        Format::Csv => csv_summary(&reports),
        Format::Text => reports.iter().map(report_text).collect(),
    };
    print!("{text}");
    Ok(exit_for(&reports))
}

fn write_sweep_dir(dir: &Path, reports: &[VerificationReport]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for r in reports {
        let path = dir.join(format!("cell_t{}_m{}.json", r.t, r.m));
        fs::write(&path, json(r)).with_context(|| format!("writing {}", path.display()))?;
    }
    let path = dir.join("summary.csv");
    fs::write(&path, csv_summary(reports)).with_context(|| format!("writing {}", path.display()))
}

#[derive(Serialize)]
struct ConfigReport<'a> {
    schema: u32,
    #[serde(flatten)]
    check: &'a InequalityCheck,
}

pub fn verify_config(c: &Common, family: &str, t: u32, i: Option<u32>, a: Option<u32>) -> Result<u8> {
    let spec = ConfigurationSpec::new(t, Family::parse(family, i, a)?);
    spec.validate()?;
    let check = check_theorem_inequality(&spec, &solver_options(c))?;
    let verdict = match (check.pass, check.certified) {
        (true, true) => "pass",
        (false, true) => "FAIL",
        (_, false) => "inconclusive",
    };
    let text = match c.format {
        Format::Json => json(&ConfigReport {
            schema: SCHEMA_VERSION,
            check: &check,
        }),
        Format::Csv => format!(
            "t,family,m,graph_value,colex_value,margin,certified,pass\n{},{},{},{},{},{},{},{}\n",
            check.t,
            check.family,
            check.m,
            fmt_sig17(check.graph_value),
            fmt_sig17(check.colex_value),
            fmt_sig17(check.margin),
            check.certified,
            check.pass
        ),
        Format::Text => {
            let mut s = format!(
                "{} at t = {}, m = {}\ngraph value: {}\ncolex value: {}\nmargin: {}\n",
                check.family,
                check.t,
                check.m,
                fmt_sig17(check.graph_value),
                fmt_sig17(check.colex_value),
                fmt_sig17(check.margin)
            );
            if let Some((v, margin)) = check.companion {
                writeln!(s, "companion value: {}\ncompanion margin: {}", fmt_sig17(v), fmt_sig17(margin)).unwrap();
            }
            writeln!(s, "{verdict}").unwrap();
            s
        }
    };
    emit(c, &text)?;
    Ok(if check.pass && check.certified { EXIT_OK } else { EXIT_NUMERIC })
}

#[derive(Serialize)]
struct CountReport {
    schema: u32,
    t: u32,
    m: usize,
    count: u64,
}

pub fn enumerate(c: &Common, t: u32, m: usize, list: bool) -> Result<u8> {
    let graphs = enumerate_left_compressed(t, m)?;
    if !list {
        let count = graphs.count() as u64;
        return emit_count(c, t, m, count);
    }
    match &c.out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let mut count = 0u64;
            for g in graphs {
                count += 1;
                let path = dir.join(format!("t{t}_m{m}_{count:05}.edges"));
                fs::write(&path, g.to_edge_list()).with_context(|| format!("writing {}", path.display()))?;
            }
            print!("{}", count_text(c.format, t, m, count));
        }
        None => {
            let mut out = String::new();
            let mut count = 0u64;
            for g in graphs {
                count += 1;
                writeln!(out, "# graph {count}").unwrap();
                out.push_str(&g.to_edge_list());
                out.push('\n');
            }
            print!("# count {count}\n{out}");
        }
    }
    Ok(EXIT_OK)
}

fn count_text(format: Format, t: u32, m: usize, count: u64) -> String {
    match format {
        Format::Json => json(&CountReport {
            schema: SCHEMA_VERSION,
            t,
            m,
            count,
        }),
        Format::Csv => format!("t,m,count\n{t},{m},{count}\n"),
        Format::Text => format!("{count}\n"),
    }
}

fn emit_count(c: &Common, t: u32, m: usize, count: u64) -> Result<u8> {
    emit(c, &count_text(c.format, t, m, count))?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckReport<'a> {
    schema: u32,
    t: u32,
    m: u64,
    cell_pass: bool,
    support_bound: SupportBoundCheck,
    delta_bound: Option<DeltaBoundCheck>,
    pass: bool,
    cell: &'a VerificationReport,
}

pub fn check(c: &Common, t: u32, m: Option<u64>, a: Option<i64>, max_graphs: Option<usize>) -> Result<u8> {
    let m = match (m, a) {
        (Some(m), _) => m,
        (None, Some(a)) => {
            let m = binomial(t as u64, 3) as i64 - a;
            anyhow::ensure!(m >= 0, "a = {a} exceeds C({t},3)");
            m as u64
        }
        (None, None) => anyhow::bail!("check needs --m or --a"),
    };
    let opts = VerifyOptions {
        solver: solver_options(c),
        max_graphs,
    };
    let cell = verify_cell(t, m, &opts)?;
    let support_bound = check_support_bound(&cell);
    // The symmetric-difference bound is parameterized from the top of the lower window.
    let offset = m as i64 - (binomial(t as u64 - 1, 3) + binomial(t as u64 - 2, 2)) as i64;
    let delta_bound = if t >= 5 && delta_range(t).contains(&offset) {
        Some(delta_bound_from_report(t, offset, &cell)?)
    } else {
        None
    };
    let pass = cell.all_pass && support_bound.pass && delta_bound.as_ref().is_none_or(|d| d.pass);
    let report = CheckReport {
        schema: SCHEMA_VERSION,
        t,
        m,
        cell_pass: cell.all_pass,
        support_bound,
        delta_bound,
        pass,
        cell: &cell,
    };
    let text = match c.format {
        Format::Json => json(&report),
        Format::Csv => format!(
            "t,m,cell_pass,support_bound,delta_bound,pass\n{},{},{},{},{},{}\n",
            t,
            m,
            report.cell_pass,
            report.support_bound.pass,
            report.delta_bound.as_ref().map(|d| d.pass.to_string()).unwrap_or_default(),
            pass
        ),
        Format::Text => {
            let mut s = report_text(&cell);
            let sb = &report.support_bound;
            writeln!(s, "support bound: {} {:?}", if sb.pass { "pass" } else { "FAIL" }, sb.witnesses).unwrap();
            match &report.delta_bound {
                Some(d) => writeln!(
                    s,
                    "difference bound (offset {}): {} <= {} {}",
                    d.a,
                    d.distances.iter().max().copied().unwrap_or(0),
                    d.bound,
                    if d.pass { "pass" } else { "FAIL" }
                )
                .unwrap(),
                None => writeln!(s, "difference bound: not applicable").unwrap(),
            }
            s
        }
    };
    emit(c, &text)?;
    Ok(if cell.partial {
        EXIT_INCOMPLETE
    } else if pass {
        EXIT_OK
    } else {
        EXIT_NUMERIC
    })
}
