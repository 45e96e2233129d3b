//! Attaching a cell to a space along a homotopy class: traces, the cone
//! cdga, the inertness decision and the fibre identities.

mod cone;
mod fiber;
mod inert;
mod pd;
mod trace;
mod wedge;

#[cfg(test)]
mod tests;

pub use cone::{cone_cdga, ConeCdga};
pub use fiber::{
    block_weights, cohomology_table, fiber_rows, is_coboundary, monomial_dims, products_vanish, wedge_like_rows, Block,
    FiberRow, FiberTable, WedgeRow,
};
pub use inert::{
    fiber_dimension_table, inertness_analysis, inertness_check, AttachAnalysis, Check, FiberReport, InertnessVerdict,
    Status, SLACK,
};
pub use pd::{
    cp_cohomology, lemma2_check, pd_complex_model, pd_trace, surface_cohomology, torus_cohomology, validate_pd,
    Lemma2Block, Lemma2Report, PdModel,
};
pub use trace::{attach_trace, describe, AttachTrace, ClassSpec};
pub use wedge::{wedge_fiber_check, WedgeFiberReport, WedgeFiberRow};
