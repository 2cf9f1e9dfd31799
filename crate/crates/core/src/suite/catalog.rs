use super::{
    Consistency, Coord, FunctionDescriptor, FunctionId, Modality, OptimumPattern, OptimumSpec,
    OptimumValue,
};

use Consistency::{Ambiguous, InconsistentAsPrinted, Verified};
use Modality::{Multimodal, Unimodal};

const fn value(v: f64) -> Coord {
    Coord::Value(v)
}

const fn pi(per_k: f64, offset: f64) -> Coord {
    Coord::PiMultiple { per_k, offset }
}

#[allow(clippy::too_many_arguments)]
const fn entry(
    id: FunctionId,
    display_name: &'static str,
    alias: Option<&'static str>,
    modality: Modality,
    separable: bool,
    bound: f64,
    value: OptimumValue,
    pattern: OptimumPattern,
    default_k: i64,
    consistency: Consistency,
    note: &'static str,
) -> FunctionDescriptor {
    FunctionDescriptor {
        id,
        display_name,
        alias,
        modality,
        separable,
        noisy: matches!(id, FunctionId::Layeb19 | FunctionId::Layeb20),
        lower_bound: -bound,
        upper_bound: bound,
        min_dimension: 2,
        fixed_dimension: if matches!(id, FunctionId::CrossLegTable) {
            Some(2)
        } else {
            None
        },
        optimum: OptimumSpec {
            value,
            pattern: Some(pattern),
            default_k,
            consistency,
        },
        note,
    }
}

static CATALOG: [FunctionDescriptor; 21] = [
    entry(
        FunctionId::Layeb01,
        "Layeb01",
        None,
        Unimodal,
        true,
        100.0,
        OptimumValue::Zero,
        OptimumPattern::Uniform(value(1.0)),
        0,
        Verified,
        "coefficient 100^2 as printed; overflows to +inf near the box edges",
    ),
    entry(
        FunctionId::Layeb02,
        "Layeb02",
        None,
        Unimodal,
        true,
        10.0,
        OptimumValue::Zero,
        OptimumPattern::Uniform(value(1.0)),
        0,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb03,
        "Layeb03",
        Some("Arclegtable"),
        Multimodal,
        false,
        10.0,
        OptimumValue::OneMinusN,
        OptimumPattern::Uniform(pi(1.0, 0.0)),
        0,
        InconsistentAsPrinted,
        "each term equals +1 at x_i = k*pi, so the printed formula gives n-1 instead of -n+1",
    ),
    entry(
        FunctionId::Layeb04,
        "Layeb04",
        Some("Crossfly"),
        Multimodal,
        false,
        10.0,
        OptimumValue::LnThousandthMinusOne,
        OptimumPattern::Alternating(value(0.0), pi(2.0, -1.0)),
        1,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb05,
        "Layeb05",
        Some("Dome"),
        Multimodal,
        false,
        10.0,
        OptimumValue::LnThousandth,
        OptimumPattern::Alternating(pi(2.0, -1.0), pi(2.0, 0.0)),
        1,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb06,
        "Layeb06",
        Some("Infinity"),
        Multimodal,
        false,
        10.0,
        OptimumValue::Zero,
        OptimumPattern::Uniform(pi(2.0, -1.0)),
        1,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb07,
        "Layeb07",
        None,
        Multimodal,
        false,
        10.0,
        OptimumValue::Zero,
        OptimumPattern::Alternating(pi(1.0, -0.5), pi(1.0, 0.0)),
        1,
        InconsistentAsPrinted,
        "the first term is 100 per summand at the printed optimum",
    ),
    entry(
        FunctionId::Layeb08,
        "Layeb08",
        None,
        Multimodal,
        false,
        10.0,
        OptimumValue::LnThousandth,
        OptimumPattern::Alternating(pi(0.0, 0.25), pi(0.0, -0.25)),
        0,
        InconsistentAsPrinted,
        "the log term is ln(pi/2 + 0.001) at the printed optimum, not ln(0.001)",
    ),
    entry(
        FunctionId::Layeb09,
        "Layeb09",
        None,
        Multimodal,
        false,
        10.0,
        OptimumValue::Zero,
        OptimumPattern::Uniform(pi(1.0, -0.5)),
        1,
        Verified,
        "read as sqrt(|e^A / e^B - 1|)",
    ),
    entry(
        FunctionId::Layeb10,
        "Layeb10",
        None,
        Multimodal,
        false,
        100.0,
        OptimumValue::Zero,
        OptimumPattern::Uniform(value(0.5)),
        0,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb11,
        "Layeb11",
        None,
        Multimodal,
        false,
        10.0,
        OptimumValue::OneMinusN,
        OptimumPattern::Alternating(value(-1.0), value(0.0)),
        0,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb12,
        "Layeb12",
        None,
        Multimodal,
        false,
        5.0,
        OptimumValue::MinusEPlusOne,
        OptimumPattern::Uniform(value(2.0)),
        0,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb13,
        "Layeb13",
        None,
        Multimodal,
        false,
        10.0,
        OptimumValue::Zero,
        OptimumPattern::Alternating(pi(0.5, 0.25), pi(-0.5, -0.25)),
        0,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb14,
        "Layeb14",
        None,
        Multimodal,
        false,
        100.0,
        OptimumValue::Zero,
        OptimumPattern::Alternating(value(-1.0), value(0.0)),
        0,
        Ambiguous,
        "printed leading minus dropped so the optimum is a minimum",
    ),
    entry(
        FunctionId::Layeb15,
        "Layeb15",
        None,
        Multimodal,
        false,
        100.0,
        OptimumValue::Zero,
        OptimumPattern::Alternating(value(1.0), value(-1.0)),
        0,
        Verified,
        "absolute value taken inside the square root",
    ),
    entry(
        FunctionId::Layeb16,
        "Layeb16",
        Some("Marmor"),
        Multimodal,
        false,
        10.0,
        OptimumValue::Zero,
        OptimumPattern::Uniform(pi(0.0, 0.25)),
        0,
        Ambiguous,
        "printed leading minus dropped; tan(x_{i+1}) * x_i grouping",
    ),
    entry(
        FunctionId::Layeb17,
        "Layeb17",
        Some("Wings"),
        Multimodal,
        false,
        100.0,
        OptimumValue::Zero,
        OptimumPattern::Alternating(value(-1.0), value(0.0)),
        0,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb18,
        "Layeb18",
        Some("Zohra"),
        Multimodal,
        false,
        10.0,
        OptimumValue::LnThousandth,
        OptimumPattern::Uniform(pi(1.0, -0.5)),
        1,
        Verified,
        "",
    ),
    entry(
        FunctionId::Layeb19,
        "Layeb19",
        Some("Noiselog"),
        Unimodal,
        true,
        5.0,
        OptimumValue::Zero,
        OptimumPattern::Uniform(value(1.0)),
        0,
        Verified,
        "one uniform draw per term, raised to the term index",
    ),
    entry(
        FunctionId::Layeb20,
        "Layeb20",
        Some("Noisesphere"),
        Unimodal,
        true,
        5.0,
        OptimumValue::Zero,
        OptimumPattern::Uniform(value(1.0)),
        0,
        Verified,
        "one uniform draw per term, raised to the term index",
    ),
    entry(
        FunctionId::CrossLegTable,
        "Cross-leg table",
        None,
        Multimodal,
        false,
        10.0,
        OptimumValue::MinusOne,
        OptimumPattern::Uniform(pi(1.0, 0.0)),
        0,
        Verified,
        "two-dimensional; -1 at any point with a coordinate equal to k*pi",
    ),
];

/// Immutable catalog entry for `id`.
pub fn descriptor(id: FunctionId) -> &'static FunctionDescriptor {
    &CATALOG[id.index()]
}
