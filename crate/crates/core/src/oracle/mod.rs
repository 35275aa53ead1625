pub mod flags;
pub mod quotients;
pub mod torus;
