pub mod baseline;
pub mod bench;
pub mod cover;
pub mod diffusion;
pub mod error;
pub mod fpt;
pub mod generate;
pub mod instance;
pub mod io;
pub mod mhs;
pub mod reductions;
