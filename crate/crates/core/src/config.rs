//! Run configuration. Values are resolved as flag, then environment
//! variable, then default.

use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{int, parse_rational, Rational};
use crate::tropical::matrix::TropMatrix;
use crate::tropical::DEFAULT_ENUM_BOUND;

pub const ENV_TRUNC: &str = "TROPLIFT_TRUNC";
pub const ENV_ENUM_BOUND: &str = "TROPLIFT_ENUM_BOUND";
pub const ENV_SEED: &str = "TROPLIFT_SEED";
pub const ENV_FORMAT: &str = "TROPLIFT_FORMAT";

/// Largest enumeration bound accepted without `allow_large_bound`.
pub const MAX_SAFE_ENUM_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Dot,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<OutputFormat> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "dot" => Ok(OutputFormat::Dot),
            "text" => Ok(OutputFormat::Text),
            _ => Err(Error::Parse(format!("unknown output format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// `None` means [`default_truncation`] for each input.
    pub truncation_order: Option<Rational>,
    pub enumeration_bound: usize,
    pub seed: u64,
    pub output_format: OutputFormat,
}

impl Default for Config {
    fn default() -> Config {
        Config { truncation_order: None, enumeration_bound: DEFAULT_ENUM_BOUND, seed: 0, output_format: OutputFormat::Json }
    }
}

/// Values given explicitly on the command line.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub truncation_order: Option<String>,
    pub enumeration_bound: Option<usize>,
    pub seed: Option<u64>,
    pub output_format: Option<String>,
    pub allow_large_bound: bool,
}

impl Config {
    /// Resolves flags over `env` over defaults.
    pub fn resolve(flags: &Overrides, env: impl Fn(&str) -> Option<String>) -> Result<Config> {
        let mut c = Config::default();
        if let Some(t) = flags.truncation_order.clone().or_else(|| env(ENV_TRUNC)) {
            c.truncation_order = Some(parse_rational(&t)?);
        }
        c.enumeration_bound = match flags.enumeration_bound {
            Some(b) => b,
            None => match env(ENV_ENUM_BOUND) {
                Some(s) => s.trim().parse().map_err(|_| Error::Parse(format!("{ENV_ENUM_BOUND}={s}")))?,
                None => c.enumeration_bound,
            },
        };
        c.seed = match flags.seed {
            Some(s) => s,
            None => match env(ENV_SEED) {
                Some(s) => s.trim().parse().map_err(|_| Error::Parse(format!("{ENV_SEED}={s}")))?,
                None => c.seed,
            },
        };
        if let Some(f) = flags.output_format.clone().or_else(|| env(ENV_FORMAT)) {
            c.output_format = f.parse()?;
        }
        if c.enumeration_bound > MAX_SAFE_ENUM_BOUND && !flags.allow_large_bound {
            return Err(Error::SizeLimit { size: c.enumeration_bound, bound: MAX_SAFE_ENUM_BOUND });
        }
        Ok(c)
    }

    /// Resolves against the process environment.
    pub fn from_env(flags: &Overrides) -> Result<Config> {
        Config::resolve(flags, |k| std::env::var(k).ok())
    }

    pub fn truncation_for(&self, a: &TropMatrix) -> Rational {
        self.truncation_order.clone().unwrap_or_else(|| default_truncation(a))
    }
}

/// `max |A_ij| · n + 20` with `n` the larger dimension.
pub fn default_truncation(a: &TropMatrix) -> Rational {
    let n = a.rows().max(a.cols());
    let m = a.to_rows().into_iter().flatten().map(|x| x.abs()).max().unwrap_or_else(|| int(0));
    m * int(n as i64) + int(20)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn env(pairs: &[(&str, &str)]) -> impl Fn(&str) -> Option<String> {
        let map: HashMap<String, String> = pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
        move |k| map.get(k).cloned()
    }

    #[test]
    fn flags_beat_env_beat_defaults() {
        let e = env(&[(ENV_SEED, "7"), (ENV_TRUNC, "5/2"), (ENV_FORMAT, "text")]);
        let c = Config::resolve(&Overrides::default(), &e).unwrap();
        assert_eq!((c.seed, c.truncation_order.clone(), c.output_format), (7, Some(Rational::new(5.into(), 2.into())), OutputFormat::Text));
        let flags = Overrides { seed: Some(9), output_format: Some("dot".into()), ..Overrides::default() };
        let c = Config::resolve(&flags, &e).unwrap();
        assert_eq!((c.seed, c.output_format), (9, OutputFormat::Dot));
        assert_eq!(Config::resolve(&Overrides::default(), env(&[])).unwrap(), Config::default());
    }

    #[test]
    fn large_bound_needs_acknowledgment() {
        let flags = Overrides { enumeration_bound: Some(9), ..Overrides::default() };
        assert!(matches!(Config::resolve(&flags, env(&[])), Err(Error::SizeLimit { .. })));
        let flags = Overrides { allow_large_bound: true, ..flags };
        assert_eq!(Config::resolve(&flags, env(&[])).unwrap().enumeration_bound, 9);
    }

    #[test]
    fn default_truncation_scales_with_entries() {
        let a = TropMatrix::from_ints(&[&[0, -3], &[2, 1]]);
        assert_eq!(default_truncation(&a), int(26));
    }
}
