//! A proof checker for a family of dependent type theories built around a
//! two-level minimalist foundation: an intensional level, an extensional
//! level, their classical and impredicative variants, and the translations
//! that connect them.
//!
//! The trusted core is small: expressions ([`syntax`]), judgements
//! ([`judgement`]), rule schemas with first-order matching ([`rules`]), and
//! the derivation checker ([`kernel`]). Everything else (builders,
//! translations, the surface format) produces derivations that the kernel
//! re-checks from scratch, so none of it has to be trusted.
//!
//! The three main translations are:
//!
//! * [`embed`]: the intensional level into the extensional level with
//!   propositional extensionality, by renaming and proof-term collapse;
//! * [`propext_elim`]: elimination of propositional extensionality in favour
//!   of explicit canonical isomorphisms ([`caniso`]);
//! * [`dn`]: a double-negation interpretation of the classical extensional
//!   theory into the intuitionistic one.
//!
//! Each translation maps checked derivations to checked derivations; the
//! output is verified in the target theory by the same kernel.

pub mod caniso;
pub mod cli;
pub mod cong;
pub mod dn;
pub mod embed;
pub mod judgement;
pub mod kernel;
pub mod loader;
pub mod propext_elim;
pub mod rules;
pub mod surface;
pub mod synth;
pub mod syntax;
pub mod taut;
pub mod theory;
pub mod transform;
