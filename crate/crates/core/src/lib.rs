pub mod arith;
pub mod algebra;
pub mod diagram;
pub mod skein;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/superalgebra.md")]
    mod superalgebra {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/skein.md")]
    mod skein {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
