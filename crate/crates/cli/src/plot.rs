//! Gnuplot script generation from result CSVs.
//!
//! Consumes the per-instance CSV (columns `n`, `m`, `tau`), averages the
//! defined correlation lengths per `(n, m)` point, and emits a self-contained
//! gnuplot script: one curve per problem size plus a vertical reference line
//! at the critical clause count `m = 4.3 n` for each size.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// Clause-to-variable ratio marked as the phase transition reference.
pub const CRITICAL_ALPHA: f64 = 4.3;

/// Reads `csv_path` and writes a gnuplot script to `script_path`.
///
/// The input must contain columns `n`, `m`, and `tau`; `tau` cells may hold
/// the `NA` sentinel, which is skipped when averaging. Errors name the
/// offending column (and line, for cell-level problems).
pub fn emit_plot_script(csv_path: &Path, script_path: &Path) -> Result<()> {
    let script = render_plot_script(csv_path)?;
    fs::write(script_path, script)
        .with_context(|| format!("cannot write {}", script_path.display()))?;
    Ok(())
}

/// Builds the script text; split out so tests can inspect it directly.
pub fn render_plot_script(csv_path: &Path) -> Result<String> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(csv_path)
        .with_context(|| format!("cannot open {}", csv_path.display()))?;

    let headers = reader
        .headers()
        .with_context(|| format!("cannot read header of {}", csv_path.display()))?
        .clone();
    let column = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| anyhow::anyhow!("missing column {:?} in {}", name, csv_path.display()))
    };
    let n_col = column("n")?;
    let m_col = column("m")?;
    let tau_col = column("tau")?;

    // (sum, count) of defined tau values per (n, m).
    let mut groups: BTreeMap<usize, BTreeMap<usize, (f64, usize)>> = BTreeMap::new();
    let mut num_rows = 0usize;
    for record in reader.records() {
        let record = record.with_context(|| format!("cannot read {}", csv_path.display()))?;
        let line = record.position().map_or(0, |p| p.line());
        let n: usize = parse_cell(&record, n_col, "n", line, csv_path)?;
        let m: usize = parse_cell(&record, m_col, "m", line, csv_path)?;
        let raw_tau = record.get(tau_col).unwrap_or("");
        let tau: Option<f64> = if raw_tau == "NA" {
            None
        } else {
            Some(parse_cell(&record, tau_col, "tau", line, csv_path)?)
        };

        num_rows += 1;
        let entry = groups.entry(n).or_default().entry(m).or_insert((0.0, 0));
        if let Some(tau) = tau {
            entry.0 += tau;
            entry.1 += 1;
        }
    }
    if num_rows == 0 {
        bail!("no data rows in {}", csv_path.display());
    }

    // Mean tau per point, dropping points where every instance was NA.
    let mut curves: Vec<(usize, Vec<(usize, f64)>)> = Vec::new();
    for (n, by_m) in &groups {
        let points: Vec<(usize, f64)> = by_m
            .iter()
            .filter(|(_, (_, count))| *count > 0)
            .map(|(m, (sum, count))| (*m, sum / *count as f64))
            .collect();
        if !points.is_empty() {
            curves.push((*n, points));
        }
    }
    if curves.is_empty() {
        bail!("no defined tau values in {}", csv_path.display());
    }

    Ok(render_script(&curves))
}

fn parse_cell<T: std::str::FromStr>(
    record: &csv::StringRecord,
    index: usize,
    name: &str,
    line: u64,
    path: &Path,
) -> Result<T> {
    let raw = record.get(index).unwrap_or("");
    raw.parse().map_err(|_| {
        anyhow::anyhow!(
            "bad value {:?} for column {:?} at line {} of {}",
            raw,
            name,
            line,
            path.display()
        )
    })
}

fn render_script(curves: &[(usize, Vec<(usize, f64)>)]) -> String {
    let mut script = String::new();
    script.push_str("# Correlation length of evolvability vs clause count.\n");
    script.push_str("# Render with: gnuplot <this file>\n");
    script.push_str("set terminal pngcairo size 900,600\n");
    script.push_str("set output 'tau_vs_m.png'\n");
    script.push_str("set xlabel 'clauses m'\n");
    script.push_str("set ylabel 'correlation length'\n");
    script.push_str("set key top right\n");
    script.push_str("set grid\n\n");

    for (n, _) in curves {
        // 4.3 n has exactly one decimal digit, so {:.1} prints it exactly.
        let critical = format!("{:.1}", CRITICAL_ALPHA * *n as f64);
        let _ = writeln!(
            script,
            "set arrow from {critical}, graph 0 to {critical}, graph 1 nohead dashtype 2 lc rgb '#808080'"
        );
        let _ = writeln!(
            script,
            "set label 'm = {critical}' at {critical}, graph 1.02 center"
        );
    }
    script.push('\n');

    for (n, points) in curves {
        let _ = writeln!(script, "$n{n} << EOD");
        for (m, tau) in points {
            let _ = writeln!(script, "{m} {tau}");
        }
        script.push_str("EOD\n\n");
    }

    let plot_terms: Vec<String> = curves
        .iter()
        .map(|(n, _)| format!("$n{n} using 1:2 with linespoints lw 2 title 'N = {n}'"))
        .collect();
    let _ = writeln!(script, "plot {}", plot_terms.join(", \\\n     "));
    script
}
