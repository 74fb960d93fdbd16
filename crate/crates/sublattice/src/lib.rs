//! File formats, parallel search, random instance generators and the
//! command-line front end for [`sublattice_core`].

pub mod cli;
pub mod formats;
pub mod parallel;
pub mod random;
pub mod svg;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] sublattice_core::Error),
    #[error("{0}")]
    Input(String),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
}
