//! Space-spec documents, command dispatch and reports.

mod report;
mod run;
mod spec;

#[cfg(test)]
mod tests;

pub use report::{exit_code, AttachSection, ModelSection, Report};
pub use run::{run, Command, Options};
pub use spec::{
    cdga_doc, cdga_presentation, parse_linear, parse_spec, preset_cohomology, reorder_document, spec_from_value,
    BasisDoc, CdgaDoc, PdSource, Scenario, Space, SpaceKind, SpaceSpec,
};
