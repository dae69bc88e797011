//! Hom and Ext between uniserial modules, syzygies, and the homological
//! dimensions derived from them.

mod dims;
mod hom;
pub mod oracle;

pub use dims::{
    cosyzygy, cosyzygy_power, domdim, domdim_module, ext_dim, gldim, gorenstein_dim, id, id_regular,
    id_sum, injective_envelope, pd, pd_sum, projective_cover, syzygy, syzygy_power, GorensteinDims,
};
pub use hom::{compose, hom_basis, hom_dim, HomMap};
pub use oracle::{oracle_ext1_dim, oracle_hom_dim};
