use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::jaeger::{homfly_jaeger, Variant};
use crate::poly::LaurentPoly2;
use crate::resolver::{homfly, homfly_parallel, Mode};

/// The four state sums that all compute the HOMFLY polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Descending,
    Ascending,
    Jaeger,
    JaegerDual,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Descending, Method::Ascending, Method::Jaeger, Method::JaegerDual];

    pub fn name(self) -> &'static str {
        match self {
            Method::Descending => "descending",
            Method::Ascending => "ascending",
            Method::Jaeger => "jaeger",
            Method::JaegerDual => "jaeger-dual",
        }
    }

    pub fn compute(self, word: &BraidWord) -> LaurentPoly2 {
        match self {
            Method::Descending => homfly(word, Mode::Descending),
            Method::Ascending => homfly(word, Mode::Ascending),
            Method::Jaeger => homfly_jaeger(word, Variant::Standard),
            Method::JaegerDual => homfly_jaeger(word, Variant::Dual),
        }
    }

    /// Like [`Method::compute`], splitting tree enumeration across threads
    /// where the method supports it.
    pub fn compute_parallel(self, word: &BraidWord) -> LaurentPoly2 {
        match self {
            Method::Descending => homfly_parallel(word, Mode::Descending),
            Method::Ascending => homfly_parallel(word, Mode::Ascending),
            _ => self.compute(word),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown method {0:?}; expected descending, ascending, jaeger or jaeger-dual")]
pub struct UnknownMethod(pub String);

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| UnknownMethod(s.to_string()))
    }
}
