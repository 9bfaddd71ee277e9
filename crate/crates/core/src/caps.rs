//! Size limits for the brute-force parts of the engine.
//!
//! Exceeding any limit is a typed [`Error::CapExceeded`], never a silent
//! truncation. The process-wide limits start from [`Caps::default`], can be
//! overridden by the `SEMIPRIM_CAPS` environment variable
//! (`stream=10000000,stored=1000000,index=100000,classes=400`), and can be
//! replaced once at start-up with [`install`].

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group whose elements may be streamed.
    pub stream: u128,
    /// Largest group subjected to streamed filters (centralisers, classes).
    pub stored: u128,
    /// Largest index of a coset action.
    pub index: u128,
    /// Largest number of conjugacy classes in a normal-subgroup computation.
    pub classes: usize,
    /// Largest p-group handed to the Thompson-subgroup search.
    pub thompson: u128,
    /// Largest number of members of a normal-subgroup lattice.
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            stream: 10_000_000,
            stored: 1_000_000,
            index: 100_000,
            classes: 400,
            thompson: 1 << 12,
            lattice: 20_000,
        }
    }
}

impl Caps {
    /// Parses `key=value` pairs separated by commas on top of the defaults.
    pub fn parse(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            let value: u128 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad number in {part:?}")))?;
            match key.trim() {
                "stream" => caps.stream = value,
                "stored" => caps.stored = value,
                "index" => caps.index = value,
                "classes" => caps.classes = value as usize,
                "thompson" => caps.thompson = value,
                "lattice" => caps.lattice = value as usize,
                other => return Err(Error::Parse(format!("unknown cap {other:?}"))),
            }
        }
        Ok(caps)
    }

    pub(crate) fn check(what: &'static str, limit: u128, actual: u128) -> Result<()> {
        if actual > limit {
            Err(Error::CapExceeded {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}

static GLOBAL: OnceLock<Caps> = OnceLock::new();

/// The process-wide limits.
pub fn get() -> Caps {
    *GLOBAL.get_or_init(|| {
        std::env::var("SEMIPRIM_CAPS")
            .ok()
            .and_then(|s| Caps::parse(&s).ok())
            .unwrap_or_default()
    })
}

/// Sets the process-wide limits. Returns false if they were already fixed.
pub fn install(caps: Caps) -> bool {
    GLOBAL.set(caps).is_ok()
}
