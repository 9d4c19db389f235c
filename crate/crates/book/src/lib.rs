//! The guide's chapters, compiled as doc-tests so the snippets stay in
//! step with the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/algebra.md")]
pub mod algebra {}
#[doc = include_str!("../../../book/src/colength.md")]
pub mod colength {}
#[doc = include_str!("../../../book/src/branches.md")]
pub mod branches {}
#[doc = include_str!("../../../book/src/foliations.md")]
pub mod foliations {}
#[doc = include_str!("../../../book/src/projective.md")]
pub mod projective {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
