pub mod config;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod lifts;
pub mod membership;
pub mod newton;
pub mod oracle;
pub mod trees;
pub mod tropical;

pub use error::{Error, Result};
pub use exact::{PuiseuxSeries, QuadExt, Rational, Sign};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/tropical.md")]
    mod tropical {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/membership.md")]
    mod membership {}
    #[doc = include_str!("../../../book/src/lifts.md")]
    mod lifts {}
    #[doc = include_str!("../../../book/src/newton.md")]
    mod newton {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
