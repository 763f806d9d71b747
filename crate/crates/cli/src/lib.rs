//! Rendering helpers shared by the `patternforge` binary.

pub mod render;
