//! Executable applications of the covering results: k-facets and inversion,
//! arrangement levels and chambers, hemisphere censuses, the hypersimplex and
//! Eulerian-number identities, and order-n mosaics.

mod chambers;
mod facets;
mod identities;
mod levels;
mod mosaic;

pub use chambers::{
    enumerate_chambers, gen_hexmesh, gen_polygon_duals, gen_random_arrangement,
    gen_random_circle_normals, hemisphere_chambers, Chamber, HemisphereCensus,
};
pub use facets::{facet_counts, invert, k_facets, line_entry_count, Line, OrientedFacet};
pub use identities::{
    binomial, binomial_usize, eulerian, hypersimplex_identity_check, hypersimplex_relative_volume,
    worpitzky_check, EulerianTable,
};
pub use levels::{level_maxima, level_minima, AffineFunction, Arrangement};
pub use mosaic::{cell_contains, order_n_mosaic_cells, MosaicCell};
