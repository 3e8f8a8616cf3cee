#include "grskew/errors.hpp"

namespace grskew {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_associative: return "NotAssociative";
    case errc::no_identity: return "NoIdentity";
    case errc::missing_inverse: return "MissingInverse";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::characteristic_two: return "CharacteristicTwo";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::not_normal: return "NotNormal";
    case errc::incompatible_orientation: return "IncompatibleOrientation";
    case errc::trivial_orientation: return "TrivialOrientation";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::symmetric_element: return "SymmetricElement";
    case errc::too_large: return "TooLarge";
    case errc::not_classic_orientation: return "NotClassicOrientation";
    case errc::hypotheses_not_met: return "HypothesesNotMet";
    case errc::hypothesis_not_satisfied: return "HypothesisNotSatisfied";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
    case errc::timed_out: return "TimedOut";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace grskew
