//! Free graded Lie algebras, the homotopy Lie algebra of a Sullivan model,
//! and Magnus logarithms of group words.

mod bracket;
mod cert;
mod expr;
mod hall;
mod magnus;
mod tensor;
mod witt;

pub use bracket::{homotopy_bracket, lcs_quotients, stage_filtration, BracketEval, Functional, GenSubspace, LcsTable};
pub use cert::{theorem3_certificate, FreeLieCertificate};
pub use expr::{parse_lie, LieExpr, LieTarget};
pub use hall::{brute_force_dims, is_lyndon, lyndon_words, FreeLie, HallElem, LieElement, Tree};
pub use magnus::{
    bch, circle_letters, lyndon_coordinates, magnus_image, magnus_log, parse_group_word, GroupWord, MagnusLog,
};
pub use tensor::{multidegree, word_degree, word_stats, Letter, TElem, Word};
pub use witt::{necklace, witt_dims, witt_dims_bounded, witt_dims_full};

#[cfg(test)]
mod tests;
