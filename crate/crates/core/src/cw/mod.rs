//! Pointed simplicial complexes, reduced chain complexes, chain-level models of
//! gluing and suspension constructions, and homology with field coefficients.

mod chain;
mod homology;
mod model;
mod simplicial;

pub use chain::{
    augmented_chain, chain_map_of, conjugate_sign, mapping_cone, sum_inclusions, sum_projections,
    suspend_map, suspension_shift, ChainComplex, ChainMap, MappingCone,
};
pub use homology::{
    cone_rank_identity, homology, induced_on_homology, mv_exactness_check, reduced_homology_dims,
    Homology,
};
pub use model::{
    compose_chain_cospans, reduced_chains, space_compose_chain_model, t_sigma, t_sigma_chain,
    ChainCospan, ChainSpan,
};
pub use simplicial::{
    dimension_filter, generated_subcomplex, relabeled_inclusion, wedge, wedge_inclusions,
    wedge_maps, SimplicialComplex, SimplicialMap, SpaceCospan,
};
