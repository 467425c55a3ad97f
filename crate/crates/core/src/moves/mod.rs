//! Combinatorial moves on colored graphs: ρ-pair switches, dipole
//! cancellation and insertion, graph connected sums, the factorized
//! ρ₃-switch and the ρ₁-pipeline, with an isomorphism test and a
//! replayable move log.

mod build;
pub mod consum;
pub mod dipole;
pub mod factor;
pub mod iso;
pub mod pipeline;
pub mod record;
pub mod rho;

pub use consum::connected_sum;
pub use dipole::{cancel_dipole, dipole_at, find_dipoles, insert_dipole, Attachment, DipoleSpec};
pub use factor::{factorized_rho3_switch, Factorization};
pub use iso::{fingerprint, iso_check, Fingerprint, Isomorphism};
pub use pipeline::{expected_delta, pipeline_bound, rho1_pipeline, DeltaCheck, PipelineOutcome, PipelineStep};
pub use record::{apply_move, graph_fingerprint, replay, MoveKind, MoveRecord};
pub use rho::{
    canonical_pairing, find_rho_pairs, rho_pair_at, switch_rho_pair, Pairing, RhoPair, SwitchResult, SwitchRule,
    SwitchVariant,
};
