//! Table builders, formatting, and golden-diff logic behind the `chroma`
//! binary, exposed for the acceptance suite.

pub mod output;
pub mod table;
