//! Size limits for the brute-force routines.

use std::str::FromStr;

use crate::error::Error;

/// Name of the environment variable read by [`Caps::from_env`].
pub const CAPS_ENV: &str = "MATCHSPECTRUM_CAPS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum vertex count for cut-weight brute force.
    pub brute_vertices: usize,
    /// Maximum left-side size for backtracking matching enumeration.
    pub enumerate_left: usize,
    /// Maximum generator-row count for code enumeration.
    pub code_rows: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            brute_vertices: 24,
            enumerate_left: 14,
            code_rows: 24,
        }
    }
}

impl Caps {
    /// Defaults, overridden by `MATCHSPECTRUM_CAPS` when it is set.
    pub fn from_env() -> Result<Self, Error> {
        match std::env::var(CAPS_ENV) {
            Ok(v) => v.parse(),
            Err(_) => Ok(Self::default()),
        }
    }
}

/// Parses `brute=<k>,enum=<k>`; either key may be omitted.
impl FromStr for Caps {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut caps = Caps::default();
        for item in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Contract(format!("cap entry `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Contract(format!("cap value `{value}` is not an integer")))?;
            match key.trim() {
                "brute" => caps.brute_vertices = value,
                "enum" => caps.enumerate_left = value,
                other => return Err(Error::Contract(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }
}
