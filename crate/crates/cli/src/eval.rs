//! Single-function evaluation from `name=value` arguments.

use std::collections::BTreeMap;

use clap::ValueEnum;
use num_complex::Complex64;

use foxwright::foxwright::{fox_wright, pfq, FoxWrightParams};
use foxwright::mathieu::{mathieu_series, MathieuSpec};
use foxwright::series::{SeriesResult, TruncationPolicy};
use foxwright::zeta::{extended_lerch_phi, hurwitz_zeta_series, lerch_phi_series, polylog_series, LerchParams};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    /// Fox-Wright pΨq: upper=a:A,… lower=b:B,… z=
    FoxWright,
    /// Generalized hypergeometric pFq: upper=a,… lower=b,… z=
    Pfq,
    /// Mathieu-type series over n^{1/α}: mu= alpha= beta= r=
    Mathieu,
    /// Hurwitz zeta ζ(s, a): s= a=
    HurwitzZeta,
    /// Riemann zeta ζ(s): s=
    RiemannZeta,
    /// Polylogarithm Li_s(z): s= z= [z_im=]
    Polylog,
    /// Hurwitz-Lerch Φ(z, s, a): z= [z_im=] s= a=
    LerchPhi,
    /// Extended Hurwitz-Lerch: upper=λ:ρ,… lower=μ:σ,… z= [z_im=] s= a=
    ExtendedLerch,
}

impl Function {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    fn keys(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            Function::FoxWright | Function::Pfq => (&["upper", "lower", "z"], &[]),
            Function::Mathieu => (&["mu", "alpha", "beta", "r"], &[]),
            Function::HurwitzZeta => (&["s", "a"], &[]),
            Function::RiemannZeta => (&["s"], &[]),
            Function::Polylog => (&["s", "z"], &["z_im"]),
            Function::LerchPhi => (&["z", "s", "a"], &["z_im"]),
            Function::ExtendedLerch => (&["upper", "lower", "z", "s", "a"], &["z_im"]),
        }
    }
}

/// `name=value` arguments after checking them against the function's keys.
#[derive(Debug)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn parse(function: Function, args: &[String]) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for arg in args {
            let (k, v) = arg
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected name=value, got {arg:?}")))?;
            if map.insert(k.to_string(), v.to_string()).is_some() {
                return Err(CliError::Usage(format!("parameter {k} given twice")));
            }
        }
        let (required, optional) = function.keys();
        if let Some(k) = map.keys().find(|k| !required.contains(&k.as_str()) && !optional.contains(&k.as_str())) {
            return Err(CliError::Usage(format!("{} takes no parameter {k}", function.name())));
        }
        let missing: Vec<&str> = required.iter().copied().filter(|k| !map.contains_key(*k)).collect();
        if !missing.is_empty() {
            return Err(CliError::Usage(format!("{} needs {}", function.name(), missing.join(", "))));
        }
        Ok(Self(map))
    }

    fn real(&self, key: &str) -> Result<f64, CliError> {
        match self.0.get(key) {
            Some(v) => number(key, v),
            None => Ok(0.0),
        }
    }

    fn complex(&self, re: &str, im: &str) -> Result<Complex64, CliError> {
        Ok(Complex64::new(self.real(re)?, self.real(im)?))
    }

    fn list(&self, key: &str) -> Result<Vec<f64>, CliError> {
        self.items(key).map(|item| number(key, item)).collect()
    }

    /// `a:A` pairs separated by commas.
    fn pairs(&self, key: &str) -> Result<Vec<(f64, f64)>, CliError> {
        self.items(key)
            .map(|item| {
                let (a, w) = item
                    .split_once(':')
                    .ok_or_else(|| CliError::Usage(format!("{key} expects value:weight pairs, got {item:?}")))?;
                Ok((number(key, a)?, number(key, w)?))
            })
            .collect()
    }

    fn items(&self, key: &str) -> impl Iterator<Item = &str> {
        self.0.get(key).map(String::as_str).unwrap_or("").split(',').map(str::trim).filter(|s| !s.is_empty())
    }
}

fn number(key: &str, v: &str) -> Result<f64, CliError> {
    v.trim().parse().map_err(|_| CliError::Usage(format!("{key}: not a number: {v:?}")))
}

/// A value with the truncation data of the series that produced it.
pub type Evaluated = SeriesResult<Complex64>;

fn real(r: SeriesResult) -> Evaluated {
    r.map(|v| Complex64::new(v, 0.0))
}

pub fn evaluate(function: Function, p: &Params, policy: &TruncationPolicy) -> Result<Evaluated, CliError> {
    let out = match function {
        Function::FoxWright => {
            let params = FoxWrightParams::new(p.pairs("upper")?, p.pairs("lower")?)?;
            real(fox_wright(&params, p.real("z")?, policy)?)
        }
        Function::Pfq => real(pfq(&p.list("upper")?, &p.list("lower")?, p.real("z")?, policy)?),
        Function::Mathieu => {
            let spec = MathieuSpec::new(p.real("mu")?, p.real("alpha")?, p.real("beta")?, p.real("r")?)?;
            real(mathieu_series(&spec, policy)?)
        }
        Function::HurwitzZeta => real(hurwitz_zeta_series(p.real("s")?, p.real("a")?)?),
        Function::RiemannZeta => {
            let s = p.real("s")?;
            if !(s > 1.0) {
                return Err(CliError::Domain(format!("riemann-zeta requires s > 1, got {s}")));
            }
            real(hurwitz_zeta_series(s, 1.0)?)
        }
        Function::Polylog => polylog_series(p.real("s")?, p.complex("z", "z_im")?, policy)?,
        Function::LerchPhi => lerch_phi_series(p.complex("z", "z_im")?, p.real("s")?, p.real("a")?, policy)?,
        Function::ExtendedLerch => {
            let params = LerchParams::new(p.pairs("upper")?, p.pairs("lower")?, p.real("s")?, p.real("a")?)?;
            extended_lerch_phi(&params, p.complex("z", "z_im")?, policy)?
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(function: Function, args: &[&str]) -> Result<Evaluated, CliError> {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        evaluate(function, &Params::parse(function, &args)?, &TruncationPolicy::default())
    }

    #[test]
    fn degenerate_fox_wright_is_exponential() {
        let v = run(Function::FoxWright, &["upper=1:1", "lower=1:1", "z=0.7"]).unwrap();
        assert!((v.value.re - 0.7f64.exp()).abs() < 1e-15);
        assert!(v.converged);
    }

    #[test]
    fn empty_lists_and_optional_keys() {
        let v = run(Function::Pfq, &["upper=", "lower=", "z=1"]).unwrap();
        assert!((v.value.re - 1f64.exp()).abs() < 1e-15);
        let v = run(Function::Polylog, &["s=2", "z=0", "z_im=0.5"]).unwrap();
        assert!(v.value.im > 0.0);
    }

    #[test]
    fn parameter_errors_are_usage_errors() {
        for (f, args) in [
            (Function::RiemannZeta, vec!["x=2"]),
            (Function::RiemannZeta, vec![]),
            (Function::RiemannZeta, vec!["s=two"]),
            (Function::RiemannZeta, vec!["s"]),
            (Function::RiemannZeta, vec!["s=2", "s=3"]),
            (Function::FoxWright, vec!["upper=1", "lower=1:1", "z=0"]),
        ] {
            assert_eq!(run(f, &args).unwrap_err().exit_code(), 2, "{f:?} {args:?}");
        }
    }

    #[test]
    fn domain_errors_name_the_condition() {
        let e = run(Function::HurwitzZeta, &["s=0.5", "a=1"]).unwrap_err();
        assert_eq!(e.exit_code(), 3);
        assert!(e.to_string().contains("s > 1"));
        assert_eq!(run(Function::RiemannZeta, &["s=1"]).unwrap_err().exit_code(), 3);
    }
}
