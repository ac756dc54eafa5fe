use std::path::PathBuf;

use crate::group::Family;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operands belong to different groups ({left} vs {right})")]
    SpecMismatch { left: String, right: String },

    #[error("element has augmentation 0 and is not a unit")]
    NotAUnit,

    #[error("operation is not defined for the {0} family")]
    WrongFamily(Family),

    #[error("{what} = {value} is outside {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("unit does not lie in H(KG)")]
    NotInH,

    #[error("conjugated element must be self-conjugated")]
    NotSelfConjugated,

    #[error("{what} exceeded cap of {cap}")]
    CapExceeded { what: &'static str, cap: u64 },

    #[error("subgroup generated by {0} is not normal")]
    NotNormal(String),

    #[error("group of order {order} exceeds size cap {cap}")]
    SizeCap { order: u64, cap: u64 },

    #[error("n = {n} unsupported for check '{check}' (supported {min}..={max})")]
    UnsupportedRange {
        check: String,
        n: u32,
        min: u32,
        max: u32,
    },

    #[error("unknown check id '{0}'")]
    UnknownCheck(String),

    #[error("cannot parse '{input}': {reason}")]
    Parse { input: String, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
