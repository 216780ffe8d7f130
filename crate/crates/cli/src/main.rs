use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use kks_core::arith::{format_rational, parse_rational, rat, Rational};
use kks_core::formulas::Catalog;
use kks_core::kks::{kks_matrix, KksParams};
use kks_core::render;
use kks_core::shapes::{aztec_type1, aztec_type2};
use kks_core::tilings::enumerate_tilings;
use kks_core::verify::{self, CheckReport, Grid, HolonomicMatrix};
use kks_core::Partition;

#[derive(Parser)]
#[command(name = "kks", version, about = "Exact checks of binomial determinant and domino tiling identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a suite (all, theorems, conjectures, catalog, main-d, main-h,
    /// scaling, epilogue, holonomic, series) or the checks of one formula id.
    Check {
        target: String,
        /// Comma-separated `key=value` pairs, e.g. `m=2,l=2,a=1`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        nmax: Option<usize>,
        /// Write the reports as a JSON array.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Print failing and skipped checks only.
        #[arg(long)]
        quiet: bool,
    },
    /// Print exact values of a catalog formula.
    Table {
        id: String,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Draw a domain, optionally with one of its tilings.
    Render {
        #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=2))]
        domain_type: u8,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: usize,
        /// Index of the tiling in enumeration order.
        #[arg(long)]
        tiling: Option<usize>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Normalized last-row cofactors of WH31 or WD33 and their relations.
    Cofactors {
        #[arg(long, default_value = "WH31")]
        matrix: String,
        #[arg(long)]
        n: usize,
    },
    /// Time one determinant of the WD33 (or WH31) matrix.
    Bench {
        #[arg(long, value_enum)]
        det: DetMethod,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "WD33")]
        matrix: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DetMethod {
    Bareiss,
    Modular,
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = pair.split_once('=').ok_or_else(|| anyhow!("expected key=value, got `{pair}`"))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Params(map))
    }

    fn int(&self, key: &str, default: i64) -> Result<i64> {
        match self.0.get(key) {
            None => Ok(default),
            Some(v) => v.parse().with_context(|| format!("`{key}` must be an integer")),
        }
    }

    fn rational(&self, key: &str, default: i64) -> Result<Rational> {
        match self.0.get(key) {
            None => Ok(rat(default)),
            Some(v) => Ok(parse_rational(v)?),
        }
    }

    fn ints(&self) -> Result<BTreeMap<String, i64>> {
        self.0
            .iter()
            .map(|(k, v)| Ok((k.clone(), v.parse().with_context(|| format!("`{k}` must be an integer"))?)))
            .collect()
    }
}

fn nonneg(v: i64, what: &str) -> Result<u64> {
    u64::try_from(v).map_err(|_| anyhow!("`{what}` must be nonnegative"))
}

fn holonomic_matrix(name: &str) -> Result<HolonomicMatrix> {
    Ok(HolonomicMatrix::parse(name)?)
}

fn run_checks(target: &str, p: &Params, nmax: Option<usize>) -> Result<Vec<CheckReport>> {
    let mut reports = match target {
        "all" => verify::check_all(),
        "conjectures" => verify::check_conjectures(nmax.unwrap_or(12)),
        "theorems" => verify::check_theorems(&Grid { n_max: nmax.unwrap_or(5), ..Grid::default() }),
        "catalog" => verify::check_catalog(nmax.unwrap_or(8)),
        "main-d" | "main-h" => {
            let (m, l, a) = (p.int("m", 2)?, p.rational("l", 2)?, p.int("a", 1)?);
            (1..=nmax.unwrap_or(5))
                .map(|n| if target == "main-d" { verify::check_main_d(m, &l, a, n) } else { verify::check_main_h(m, &l, a, n) })
                .collect()
        }
        "scaling" => {
            let (s, r) = (nonneg(p.int("s", 1)?, "s")?, nonneg(p.int("r", 1)?, "r")?);
            let (c1, c2, l) = (p.rational("c1", 2)?, p.rational("c2", 3)?, p.rational("l", 2)?);
            verify::check_scaling(s, r, nmax.unwrap_or(4), &c1, &c2, &l)
        }
        "epilogue" => {
            let (s, r) = (nonneg(p.int("s", 1)?, "s")?, nonneg(p.int("r", 1)?, "r")?);
            verify::check_epilogue(s, r, nmax.unwrap_or(5), p.int("b", 0)?, p.int("rho", 1)?)
        }
        "holonomic" => {
            let matrix = holonomic_matrix(p.0.get("matrix").map_or("WH31", String::as_str))?;
            (1..=nmax.unwrap_or(6)).flat_map(|n| verify::check_holonomic(&matrix, n)).collect()
        }
        "series" => {
            let (m, l, a) = (p.int("m", 2)?, p.rational("l", 2)?, p.int("a", 1)?);
            let t = nonneg(p.int("truncation", 12)?, "truncation")? as usize;
            vec![verify::check_series_relation(m, &l, a, t), verify::check_series_relation_hat(m, &l, a, t)]
        }
        id => {
            let f = Catalog::builtin().get(id).map_err(|_| anyhow!("unknown suite or formula id `{id}`"))?;
            let overrides = p.ints()?;
            (1..=nmax.unwrap_or(6)).flat_map(|n| verify::check_formula(&f.id, n, &overrides)).collect()
        }
    };
    verify::sort_reports(&mut reports);
    Ok(reports)
}

fn check(target: &str, params: &str, nmax: Option<usize>, json: Option<PathBuf>, quiet: bool) -> Result<bool> {
    let p = Params::parse(params)?;
    let reports = run_checks(target, &p, nmax)?;
    for r in &reports {
        if !quiet || !r.status.is_pass() {
            println!("{}", r.summary());
        }
    }
    let passed = reports.iter().filter(|r| r.status.is_pass()).count();
    let failed = reports.iter().filter(|r| r.status.is_fail()).count();
    println!("{passed} passed, {failed} failed, {} skipped", reports.len() - passed - failed);
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&reports)?;
        std::fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(failed == 0)
}

fn table(id: &str, nmax: usize, params: &str) -> Result<()> {
    let f = Catalog::builtin().get(id)?;
    let overrides = Params::parse(params)?.ints()?;
    println!("# {}: {}", f.id, f.description);
    for n in 1..=nmax {
        let v = f.eval(n, &overrides)?;
        println!("{n}\t{}", if v.is_integer() { v.numer().to_string() } else { format_rational(&v) });
    }
    Ok(())
}

fn render_cmd(domain_type: u8, s: u64, r: u64, n: usize, tiling: Option<usize>, svg: Option<PathBuf>) -> Result<()> {
    let lambda = Partition::arithmetic(s, r, n);
    let domain = if domain_type == 1 { aztec_type1(&lambda) } else { aztec_type2(&lambda) };
    let chosen = match tiling {
        None => None,
        Some(k) => Some(
            enumerate_tilings(&domain)?
                .nth(k)
                .ok_or_else(|| anyhow!("the domain has fewer than {} tilings", k + 1))?,
        ),
    };
    println!("type {domain_type} domain of {lambda}: {} cells", domain.len());
    print!("{}", render::ascii(&domain, chosen.as_ref()));
    if let Some(t) = &chosen {
        let [d1, d2, d3, d4] = t.counts();
        println!("dominoes: D1={d1} D2={d2} D3={d3} D4={d4}");
    }
    if let Some(path) = svg {
        std::fs::write(&path, render::svg(&domain, chosen.as_ref()))
            .with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cofactors(matrix: &str, n: usize) -> Result<bool> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    let m = holonomic_matrix(matrix)?;
    let a = m.matrix(n)?;
    for (j, c) in a.normalized_cofactors()?.iter().enumerate() {
        println!("c[{j}] = {c}");
    }
    let reports = verify::check_holonomic(&m, n);
    for r in &reports {
        println!("{}", r.summary());
    }
    Ok(reports.iter().all(|r| r.status.is_pass()))
}

fn bench(det: DetMethod, n: usize, matrix: &str) -> Result<()> {
    let p = match matrix.to_ascii_uppercase().as_str() {
        "WD33" => KksParams::wd33(n),
        "WH31" => KksParams::wh31(n),
        other => bail!("unknown matrix `{other}`"),
    };
    let m = kks_matrix(&p)?;
    let start = Instant::now();
    let value = match det {
        DetMethod::Bareiss => m.det_bareiss(),
        DetMethod::Modular => m.det_modular()?,
    };
    let elapsed = start.elapsed();
    let digits = value.numer().to_string().trim_start_matches('-').len();
    println!("{} n={n}: {digits} digits in {elapsed:.2?}", matrix.to_ascii_uppercase());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check { target, params, nmax, json, quiet } => check(&target, &params, nmax, json, quiet),
        Command::Table { id, nmax, params } => table(&id, nmax, &params).map(|_| true),
        Command::Render { domain_type, s, r, n, tiling, svg } => render_cmd(domain_type, s, r, n, tiling, svg).map(|_| true),
        Command::Cofactors { matrix, n } => cofactors(&matrix, n),
        Command::Bench { det, n, matrix } => bench(det, n, &matrix).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        let p = Params::parse("m=2, l=1/2 ,a=0").unwrap();
        assert_eq!(p.int("m", 0).unwrap(), 2);
        assert_eq!(p.rational("l", 0).unwrap(), kks_core::arith::ratio(1, 2));
        assert_eq!(p.int("missing", 7).unwrap(), 7);
        assert!(p.int("l", 0).is_err());
        assert!(Params::parse("m").is_err());
        assert!(Params::parse("").unwrap().0.is_empty());
    }
}
