//! Two-cells attached to a wedge of circles: the dg Lie algebra with
//! `dy = α`, the linear derivation `d₀` on the cochain side, the
//! Quadratic model `(ΛV, d₁)` with `V = W¹ ∩ ker d₀`, and asphericity.

mod aspherical;
mod d0;
mod dglie;
#[cfg(test)]
mod tests;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::lie::{parse_group_word, GroupWord};

pub use aspherical::{
    aspherical_check, corollary_model, model_aspherical, one_relator_verdict, whitehead_check, CorollaryModel,
    OneRelatorReport, WhiteheadCheck,
};
pub use d0::{build_d0, D0Datum, StepTwoStage};
pub use dglie::{build_dg_lie, dg_lie_homology, DgLie, DgLieHomology, HomologyRow};

/// `X = S¹ ∨ … ∨ S¹` (`r` circles) with a 2-cell attached along `word`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneRelatorScenario {
    pub r: usize,
    pub word: String,
    pub group_word: GroupWord,
    pub caps: Caps,
}

impl OneRelatorScenario {
    pub fn new(r: usize, word: &str, caps: Caps) -> Result<Self> {
        if r < 2 {
            return Err(Error::Hypothesis("a one-relator scenario needs at least two circles".into()));
        }
        if caps.max_length.is_none() {
            return Err(Error::CapMissing("circles".into()));
        }
        let group_word = parse_group_word(word, r)?;
        Ok(OneRelatorScenario { r, word: word.to_string(), group_word, caps })
    }

    pub fn max_length(&self) -> u32 {
        self.caps.max_length.expect("checked on construction")
    }

    pub fn is_trivial(&self) -> bool {
        self.group_word.is_trivial()
    }
}
