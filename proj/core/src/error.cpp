#include "recirc/common/error.hpp"

namespace recirc {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NotAValidator: return "NotAValidator";
    case Errc::InvalidTransactionInBody: return "InvalidTransactionInBody";
    case Errc::DuplicateTransaction: return "DuplicateTransaction";
    case Errc::BadParentHash: return "BadParentHash";
    case Errc::BadMerkleRoot: return "BadMerkleRoot";
    case Errc::BadValidatorSignature: return "BadValidatorSignature";
    case Errc::InvalidBody: return "InvalidBody";
    case Errc::UnknownActor: return "UnknownActor";
    case Errc::RoleNodeClassMismatch: return "RoleNodeClassMismatch";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::UnknownParty: return "UnknownParty";
    case Errc::PanelNotActive: return "PanelNotActive";
    case Errc::IllegalTransition: return "IllegalTransition";
    case Errc::WrongTickWindow: return "WrongTickWindow";
    case Errc::PhaseNotSettleable: return "PhaseNotSettleable";
    case Errc::AmountMismatch: return "AmountMismatch";
    case Errc::Unauthorized: return "Unauthorized";
    case Errc::MissingLiabilityPayment: return "MissingLiabilityPayment";
    case Errc::WrongPhase: return "WrongPhase";
    case Errc::DuplicateContract: return "DuplicateContract";
    case Errc::MissingSignature: return "MissingSignature";
    case Errc::SequenceViolation: return "SequenceViolation";
    case Errc::DoubleWithdrawal: return "DoubleWithdrawal";
    case Errc::NonpositivePrice: return "NonpositivePrice";
    case Errc::InsufficientFiat: return "InsufficientFiat";
    case Errc::InsufficientReserve: return "InsufficientReserve";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

}  // namespace recirc
