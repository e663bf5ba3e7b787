pub mod error;
pub mod scalar;
pub mod circle;
pub mod maps;
pub mod group;
pub mod certificate;
pub mod codec;
pub mod lamination;
pub mod constructions;
pub mod moore;
pub mod scenario;
pub mod report;
pub mod render;
