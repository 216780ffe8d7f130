//! A catalog of product formulas read from TOML, evaluated exactly.

mod expr;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::arith::{gamma_ratio_product, parse_rational, pow_rational, GammaArg, Rational};
use crate::error::{Error, Result};
use crate::kks::KksParams;
use crate::paths::{PathFamilyParams, PathKind};
use crate::tilings::WeightTriple;

pub use expr::{parse_poly, Poly};

const BUILTIN: &str = include_str!("../../catalog/formulas.toml");

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogFile {
    formula: Vec<FormulaSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FormulaSpec {
    id: String,
    #[serde(default)]
    description: String,
    #[serde(default)]
    params: Vec<ParamSpec>,
    #[serde(default = "default_index")]
    index: [String; 2],
    #[serde(default)]
    power: Vec<PowerSpec>,
    #[serde(default)]
    outer_gamma_numer: Vec<String>,
    #[serde(default)]
    outer_gamma_denom: Vec<String>,
    #[serde(default)]
    numer: Vec<String>,
    #[serde(default)]
    denom: Vec<String>,
    #[serde(default)]
    gamma_numer: Vec<String>,
    #[serde(default)]
    gamma_denom: Vec<String>,
    kks: Option<KksSpec>,
    paths: Option<PathsSpec>,
}

fn default_index() -> [String; 2] {
    ["1".into(), "n".into()]
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamSpec {
    name: String,
    default: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PowerSpec {
    base: String,
    exponent: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct KksSpec {
    m: String,
    l: String,
    a: String,
    b: String,
    c: String,
    d: String,
    #[serde(default = "one")]
    scale: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PathsSpec {
    s: String,
    r: String,
    kind: String,
    weights: [String; 3],
    #[serde(default = "one")]
    scale: String,
}

fn one() -> String {
    "1".into()
}

/// Binomial determinant with `formula = scale * det`.
#[derive(Clone, Debug)]
pub struct KksLink {
    exprs: [Poly; 6],
    pub scale: Rational,
}

/// Path family with `formula = scale * weighted count`.
#[derive(Clone, Debug)]
pub struct PathsLink {
    s: Poly,
    r: Poly,
    pub kind: PathKind,
    weights: [Poly; 3],
    pub scale: Rational,
}

#[derive(Clone, Debug)]
pub struct ProductFormula {
    pub id: String,
    pub description: String,
    params: Vec<(String, i64)>,
    index: [Poly; 2],
    power: Vec<(Poly, Poly)>,
    outer_gamma_numer: Vec<Poly>,
    outer_gamma_denom: Vec<Poly>,
    numer: Vec<Poly>,
    denom: Vec<Poly>,
    gamma_numer: Vec<Poly>,
    gamma_denom: Vec<Poly>,
    pub kks: Option<KksLink>,
    pub paths: Option<PathsLink>,
}

fn parse_all(texts: &[String]) -> Result<Vec<Poly>> {
    texts.iter().map(|t| parse_poly(t)).collect()
}

fn check_vars(id: &str, polys: &[&Poly], allowed: &BTreeSet<String>) -> Result<()> {
    for p in polys {
        if let Some(v) = p.variables().difference(allowed).next() {
            return Err(Error::Catalog(format!("{id}: unknown variable `{v}` in `{p}`")));
        }
    }
    Ok(())
}

/// The Gamma arguments must cancel class by class; unmatched classes would
/// leave an irrational value.
fn check_pairing(id: &str, numer: &[&Poly], denom: &[&Poly]) -> Result<()> {
    let mut balance: BTreeMap<Vec<(String, Rational)>, i64> = BTreeMap::new();
    for p in numer {
        let key = p.fractional_key().map_err(|e| Error::Catalog(format!("{id}: {e}")))?;
        *balance.entry(key).or_insert(0) += 1;
    }
    for p in denom {
        let key = p.fractional_key().map_err(|e| Error::Catalog(format!("{id}: {e}")))?;
        *balance.entry(key).or_insert(0) -= 1;
    }
    for (key, count) in balance {
        if !key.is_empty() && count != 0 {
            let shown: Vec<String> = key.iter().map(|(v, f)| format!("{v}:{f}")).collect();
            return Err(Error::Catalog(format!(
                "{id}: Gamma arguments with fractional class [{}] do not cancel",
                shown.join(", ")
            )));
        }
    }
    Ok(())
}

impl ProductFormula {
    fn compile(spec: FormulaSpec) -> Result<Self> {
        let id = spec.id;
        let params: Vec<(String, i64)> = spec.params.into_iter().map(|p| (p.name, p.default)).collect();
        let mut outer_vars: BTreeSet<String> = params.iter().map(|(n, _)| n.clone()).collect();
        outer_vars.insert("n".into());
        if params.iter().any(|(n, _)| n == "n" || n == "i") {
            return Err(Error::Catalog(format!("{id}: `n` and `i` cannot be params")));
        }
        let mut inner_vars = outer_vars.clone();
        inner_vars.insert("i".into());

        let index = [parse_poly(&spec.index[0])?, parse_poly(&spec.index[1])?];
        let power = spec
            .power
            .iter()
            .map(|p| Ok((parse_poly(&p.base)?, parse_poly(&p.exponent)?)))
            .collect::<Result<Vec<_>>>()?;
        let f = ProductFormula {
            description: spec.description,
            params,
            index,
            power,
            outer_gamma_numer: parse_all(&spec.outer_gamma_numer)?,
            outer_gamma_denom: parse_all(&spec.outer_gamma_denom)?,
            numer: parse_all(&spec.numer)?,
            denom: parse_all(&spec.denom)?,
            gamma_numer: parse_all(&spec.gamma_numer)?,
            gamma_denom: parse_all(&spec.gamma_denom)?,
            kks: spec.kks.map(|k| compile_kks(&k)).transpose()?,
            paths: spec.paths.map(|p| compile_paths(&p)).transpose()?,
            id,
        };

        let mut outer: Vec<&Poly> = f.index.iter().collect();
        outer.extend(f.power.iter().flat_map(|(b, e)| [b, e]));
        outer.extend(&f.outer_gamma_numer);
        outer.extend(&f.outer_gamma_denom);
        if let Some(k) = &f.kks {
            outer.extend(&k.exprs);
        }
        if let Some(p) = &f.paths {
            outer.extend([&p.s, &p.r]);
            outer.extend(&p.weights);
        }
        check_vars(&f.id, &outer, &outer_vars)?;
        let inner: Vec<&Poly> =
            f.numer.iter().chain(&f.denom).chain(&f.gamma_numer).chain(&f.gamma_denom).collect();
        check_vars(&f.id, &inner, &inner_vars)?;

        let gn: Vec<&Poly> = f.gamma_numer.iter().chain(&f.outer_gamma_numer).collect();
        let gd: Vec<&Poly> = f.gamma_denom.iter().chain(&f.outer_gamma_denom).collect();
        check_pairing(&f.id, &gn, &gd)?;
        Ok(f)
    }

    pub fn param_names(&self) -> impl Iterator<Item = (&str, i64)> {
        self.params.iter().map(|(n, d)| (n.as_str(), *d))
    }

    /// Defaults overridden by `overrides`; unknown names are an error.
    fn bindings(&self, n: usize, overrides: &BTreeMap<String, i64>) -> Result<BTreeMap<String, i64>> {
        let mut vars: BTreeMap<String, i64> = self.params.iter().cloned().collect();
        for (k, v) in overrides {
            if !vars.contains_key(k) {
                return Err(Error::InvalidParameter(format!("{} has no parameter `{k}`", self.id)));
            }
            vars.insert(k.clone(), *v);
        }
        vars.insert("n".into(), n as i64);
        Ok(vars)
    }

    /// The product at `n`; the empty case `n = 0` is 1.
    pub fn eval(&self, n: usize, overrides: &BTreeMap<String, i64>) -> Result<Rational> {
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut vars = self.bindings(n, overrides)?;
        let ev = |p: &Poly, vars: &BTreeMap<String, i64>| expr::eval_with(p, vars);
        let as_int = |q: Rational, what: &str| -> Result<i64> {
            if !q.is_integer() {
                return Err(Error::Catalog(format!("{}: {what} evaluates to {q}", self.id)));
            }
            q.to_integer().try_into().map_err(|_| Error::Catalog(format!("{}: {what} out of range", self.id)))
        };

        let mut value = Rational::one();
        for (base, exp) in &self.power {
            let e = as_int(ev(exp, &vars)?, "an exponent")?;
            value *= pow_rational(&ev(base, &vars)?, e)?;
        }
        let mut gn = Vec::new();
        let mut gd = Vec::new();
        for p in &self.outer_gamma_numer {
            gn.push(GammaArg::new(ev(p, &vars)?)?);
        }
        for p in &self.outer_gamma_denom {
            gd.push(GammaArg::new(ev(p, &vars)?)?);
        }
        let lo = as_int(ev(&self.index[0], &vars)?, "the lower index")?;
        let hi = as_int(ev(&self.index[1], &vars)?, "the upper index")?;
        for i in lo..=hi {
            vars.insert("i".into(), i);
            for p in &self.numer {
                value *= ev(p, &vars)?;
            }
            for p in &self.denom {
                let d = ev(p, &vars)?;
                if d.is_zero() {
                    return Err(Error::Pole(format!("{}: factor `{p}` vanishes at i = {i}", self.id)));
                }
                value /= d;
            }
            for p in &self.gamma_numer {
                gn.push(GammaArg::new(ev(p, &vars)?)?);
            }
            for p in &self.gamma_denom {
                gd.push(GammaArg::new(ev(p, &vars)?)?);
            }
        }
        Ok(value * gamma_ratio_product(&gn, &gd)?)
    }

    /// `eval(n) / eval(n - 1)`.
    pub fn ratio(&self, n: usize, overrides: &BTreeMap<String, i64>) -> Result<Rational> {
        if n == 0 {
            return Err(Error::InvalidParameter("ratio needs n >= 1".into()));
        }
        let prev = self.eval(n - 1, overrides)?;
        if prev.is_zero() {
            return Err(Error::Pole(format!("{} vanishes at n = {}", self.id, n - 1)));
        }
        Ok(self.eval(n, overrides)? / prev)
    }

    pub fn kks_params(&self, n: usize, overrides: &BTreeMap<String, i64>) -> Result<Option<(KksParams, Rational)>> {
        let Some(link) = &self.kks else { return Ok(None) };
        let vars = self.bindings(n, overrides)?;
        let mut ints = [0i64; 6];
        for (k, p) in link.exprs.iter().enumerate() {
            if k == 1 {
                continue;
            }
            let q = expr::eval_with(p, &vars)?;
            if !q.is_integer() {
                return Err(Error::Catalog(format!("{}: determinant parameter `{p}` is not an integer", self.id)));
            }
            ints[k] = q.to_integer().try_into().map_err(|_| Error::Catalog("parameter out of range".into()))?;
        }
        let l = expr::eval_with(&link.exprs[1], &vars)?;
        Ok(Some((KksParams::new(ints[0], l, ints[2], ints[3], ints[4], ints[5], n), link.scale.clone())))
    }

    pub fn path_params(
        &self,
        n: usize,
        overrides: &BTreeMap<String, i64>,
    ) -> Result<Option<(PathFamilyParams, WeightTriple, Rational)>> {
        let Some(link) = &self.paths else { return Ok(None) };
        let vars = self.bindings(n, overrides)?;
        let nonneg = |p: &Poly| -> Result<u64> {
            let q = expr::eval_with(p, &vars)?;
            if !q.is_integer() || q < Rational::zero() {
                return Err(Error::Catalog(format!("{}: `{p}` must be a nonnegative integer", self.id)));
            }
            q.to_integer().try_into().map_err(|_| Error::Catalog("parameter out of range".into()))
        };
        let params = PathFamilyParams::new(nonneg(&link.s)?, nonneg(&link.r)?, n, link.kind);
        let w = WeightTriple::new(
            expr::eval_with(&link.weights[0], &vars)?,
            expr::eval_with(&link.weights[1], &vars)?,
            expr::eval_with(&link.weights[2], &vars)?,
        );
        Ok(Some((params, w, link.scale.clone())))
    }
}

fn compile_kks(k: &KksSpec) -> Result<KksLink> {
    Ok(KksLink {
        exprs: [
            parse_poly(&k.m)?,
            parse_poly(&k.l)?,
            parse_poly(&k.a)?,
            parse_poly(&k.b)?,
            parse_poly(&k.c)?,
            parse_poly(&k.d)?,
        ],
        scale: parse_rational(&k.scale)?,
    })
}

fn compile_paths(p: &PathsSpec) -> Result<PathsLink> {
    let kind = match p.kind.as_str() {
        "D" => PathKind::Delannoy,
        "H" => PathKind::HDelannoy,
        other => return Err(Error::Catalog(format!("path kind `{other}` is not D or H"))),
    };
    Ok(PathsLink {
        s: parse_poly(&p.s)?,
        r: parse_poly(&p.r)?,
        kind,
        weights: [parse_poly(&p.weights[0])?, parse_poly(&p.weights[1])?, parse_poly(&p.weights[2])?],
        scale: parse_rational(&p.scale)?,
    })
}

#[derive(Clone, Debug)]
pub struct Catalog {
    formulas: Vec<ProductFormula>,
}

impl Catalog {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: CatalogFile = toml::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        let mut seen = BTreeSet::new();
        let mut formulas = Vec::new();
        for spec in file.formula {
            if !seen.insert(spec.id.clone()) {
                return Err(Error::Catalog(format!("duplicate id {}", spec.id)));
            }
            formulas.push(ProductFormula::compile(spec)?);
        }
        Ok(Catalog { formulas })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Catalog::from_toml_str(&text)
    }

    /// The catalog shipped with the crate, parsed once.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::from_toml_str(BUILTIN).expect("built-in catalog is valid"))
    }

    pub fn get(&self, id: &str) -> Result<&ProductFormula> {
        self.formulas.iter().find(|f| f.id == id).ok_or_else(|| Error::UnknownFormula(id.to_string()))
    }

    pub fn formulas(&self) -> &[ProductFormula] {
        &self.formulas
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.formulas.iter().map(|f| f.id.as_str())
    }
}

pub fn eval_formula(id: &str, n: usize, params: &BTreeMap<String, i64>) -> Result<Rational> {
    Catalog::builtin().get(id)?.eval(n, params)
}

pub fn formula_ratio(id: &str, n: usize, params: &BTreeMap<String, i64>) -> Result<Rational> {
    Catalog::builtin().get(id)?.ratio(n, params)
}
