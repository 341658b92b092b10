pub mod analyze;
pub mod curate;
pub mod filter;
