pub mod gf;
pub mod rfcode;
pub mod zeta;
