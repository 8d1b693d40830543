//! Exact arithmetic and word combinatorics for the partial order on
//! 2-bridge knots: continued-fraction normal forms, the tile/connector
//! parsing engine, order decisions and upper-bound constructions, a
//! brute-force verification oracle, and a diagram renderer.

pub mod bridge;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod order;
pub mod parsing;
pub mod rational;
pub mod words;

pub use error::{Error, Result};
pub use rational::{eval_cf, even_expansion, CFExpansion, EvenWord, Fraction};
pub use words::{class_of, expand, maximal_components, ConnectorWord, ExpandedWord, WordClass, WordParity};
