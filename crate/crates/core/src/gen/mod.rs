//! Generators for hard benchmark families: block-structured bipartite
//! grids with high girth, the domination-to-pursuit reduction instances
//! built on them (undirected and oriented), and twin augmentation for
//! manufacturing large instances with known answers.

mod hpqr;
mod rbds;
mod twins;

pub use hpqr::{gen_hpqr, gen_tripartite_layers, HpqrCertificate, HpqrParams};
pub use rbds::{
    augment_rbds, gen_oriented_reduction, gen_rbds_reduction, rbds_solve, RbdsInstance,
    ReductionOutput,
};
pub use twins::{twin_augment, TwinMode};
