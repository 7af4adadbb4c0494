pub mod cli;
pub mod error;
pub mod group;
pub mod pancake;
pub mod presentation;
pub mod rewriting;
pub mod todd_coxeter;
pub mod verify;
