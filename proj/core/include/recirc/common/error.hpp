#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recirc {

enum class Errc {
  // ledger
  NotAValidator,
  InvalidTransactionInBody,
  DuplicateTransaction,
  BadParentHash,
  BadMerkleRoot,
  BadValidatorSignature,
  InvalidBody,
  // identity
  UnknownActor,
  RoleNodeClassMismatch,
  // lifecycle
  InvalidParameters,
  UnknownParty,
  PanelNotActive,
  IllegalTransition,
  WrongTickWindow,
  PhaseNotSettleable,
  // settlement
  AmountMismatch,
  Unauthorized,
  MissingLiabilityPayment,
  // escrow
  WrongPhase,
  DuplicateContract,
  MissingSignature,
  SequenceViolation,
  DoubleWithdrawal,
  // coins
  NonpositivePrice,
  InsufficientFiat,
  InsufficientReserve,
  // io
  ParseError,
  ValidationError,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace recirc
