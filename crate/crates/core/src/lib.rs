//! Exact verification of the geography of Chern ratios of smooth complete
//! intersection threefolds with ample canonical class.
//!
//! Everything runs in arbitrary-precision rational arithmetic: enumeration of
//! the ratio points (x, y) = (c1^3/(c1 c2), c3/(c1 c2)) over all degree
//! tuples up to a budget, their exact convex hull, positivity certificates
//! for every supporting-line inequality (re-validatable by substitution), and
//! membership/combination certificates for the dual cone of valid linear
//! Chern-number inequalities. Floating point appears only in display-side
//! decimal rendering.

pub mod certs;
pub mod chern;
pub mod cone;
pub mod corners;
pub mod enumeration;
pub mod error;
pub mod hull;
pub mod poly;
pub mod rational;
pub mod report;
pub mod steps;

pub use certs::{
    integer_positivity, positivity_digest, taylor_positivity, IntegerPositivityCert, Positivity,
    TaylorOutcome, TaylorPositivityCert,
};
pub use chern::{
    chern_numbers, chern_numbers_equal, chern_of_tuple, is_canonical, side_of_line, yau_holds,
    ChernData, DegreeTuple, Line, PowerSums, RatioPoint, Side,
};
pub use cone::{
    corollary_check, edges, Cone, ConeCertificate, ConeVector, CorollaryReport, EdgeIndex, EdgeSet,
    MembershipVerdict, TailAnalysis,
};
pub use corners::{
    corner, corner_min_s1, corner_witness, discrepancies, edge_line, family_x, family_y,
    CornerIndex, Discrepancy, LineIndex,
};
pub use enumeration::{
    enumerate_points, eval_on_rational_tuple, partition_count, partitions, reduction_check,
    sample_real_tuples, PointCloud, ReductionOutcome, ReductionProblem,
};
pub use error::{Error, Result};
pub use hull::{convex_hull, corner_report, halfplane_check, CornerReport, HalfplaneReport, Hull};
pub use poly::{BiPoly, UniPoly};
pub use rational::{dec6, fmt_q, parse_q, q, qi, qu, Q};
pub use report::{full_verify, RunConfig, StepReport, VerificationReport};
pub use steps::{
    build_g, build_step1_poly, quad_endpoint_min, threshold, verify_step1, verify_step2,
    verify_step2_symbolic_m, verify_step3, EndpointMin, Step1Report, Step2Report, Step3Report,
    SymbolicStep2Report,
};
