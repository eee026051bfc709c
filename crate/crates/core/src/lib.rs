//! Computations in the dual braid monoid `BKL(n)` generated by the band
//! generators `a(p,q)`: greedy normal forms over non-crossing partitions,
//! the `phi_n`-splitting and rotating normal form, the rotating ordering,
//! and an independent handle-reduction implementation of the braid
//! ordering to check it against.

pub mod brute;
pub mod error;
pub mod garside;
pub mod ncp;
pub mod ordering;
pub mod rotating;
pub mod sigma;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use garside::{equal, gnf, right_divides, right_quotient, tail, GreedyNF};
pub use ncp::{letter_ncp, NonCrossingPartition};
pub use ordering::{cmp_rotating, is_initial_segment_member, min_of_breadth, successor};
pub use rotating::{
    breadth, dangerous_braid, is_ladder, last_letter, rnf, separator, splitting, splitting_tree,
    LadderWitness, Splitting, SplittingTree,
};
pub use sigma::{cmp_dehornoy, free_reduce, handle_reduce, sigma_class, HandleReducer, SigmaClass};
pub use word::{band_to_artin, delta_word, phi, ArtinLetter, ArtinWord, BandLetter, BandWord};
