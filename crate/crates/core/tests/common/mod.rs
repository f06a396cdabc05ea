pub mod weyl;
