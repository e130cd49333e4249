//! Graph and Kneser-representation builders.

mod box_complex;
mod extend;
mod iso;
mod kneser;
mod mycielski;
mod paper;
mod product;

pub use box_complex::{box_complex, BoxVariant, Z2SimplicialComplex, BOX_COMPLEX_CAP};
pub use extend::{extend_rep_edge, extend_rep_isolated, EdgeExtension};
pub use iso::{graphs_isomorphic, graphs_isomorphic_capped, is_isomorphism, DEFAULT_ISO_CAP};
pub use kneser::{
    kneser, kneser_graph, kneser_hypergraph, schrijver, schrijver_hypergraph, stable_kneser,
    stable_kneser_hypergraph, stable_subsets, KneserRepresentation,
};
pub use mycielski::{blow_up, mycielski_representation, mycielskian, BlowUp, MycielskiRepresentation};
pub use paper::{schrijver_paper_representation, PaperVariant};
pub use product::{categorical_product, product_representation, ProductRepresentation};
