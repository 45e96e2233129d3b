use serde::{Deserialize, Serialize};

/// Truncation caps: maximum total degree `N` and maximum wedge/bracket length `L`.
///
/// Every verdict and dimension produced by the crate is certified only within
/// these caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_degree: u32,
    pub max_length: Option<u32>,
}

impl Caps {
    pub const fn new(max_degree: u32, max_length: u32) -> Self {
        Caps { max_degree, max_length: Some(max_length) }
    }

    pub const fn degree_only(max_degree: u32) -> Self {
        Caps { max_degree, max_length: None }
    }

    pub fn with_degree(self, max_degree: u32) -> Self {
        Caps { max_degree, ..self }
    }
}

impl Default for Caps {
    fn default() -> Self {
        Caps::new(8, 6)
    }
}
