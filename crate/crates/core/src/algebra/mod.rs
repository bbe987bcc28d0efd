//! The twisted group algebra `O(R)` with basis `{e^x : x in F8}` and product
//! `e^x e^y = (-1)^phi(x,y) e^(x+y)`.

mod f4;
mod octonion;
pub mod random;
mod scalar;
mod table;

pub use f4::{check_f4_remark, f4_product, f4_sigma, F4Report};
pub use octonion::{
    associator_formula, associator_formula_with, json_key, DyadicOctonion, IntOctonion, Octonion,
    RationalOctonion,
};
pub use scalar::{Dyadic, Scalar};
pub use table::{standard_table, table_checked, BasisLabel, MultiplicationTable, SignedLabel};
