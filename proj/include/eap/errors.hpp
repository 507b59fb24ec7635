#ifndef EAP_ERRORS_HPP
#define EAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eap {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPrimeCharacteristic : Error {
  explicit NonPrimeCharacteristic(const std::string& m) : Error(m) {}
};
struct NoSuchRoot : Error {
  explicit NoSuchRoot(const std::string& m) : Error(m) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& m) : Error(m) {}
};
struct SingularMatrix : Error {
  explicit SingularMatrix(const std::string& m) : Error(m) {}
};
struct OrderExceedsCap : Error {
  explicit OrderExceedsCap(const std::string& m) : Error(m) {}
};
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& m) : Error(m) {}
};
struct BadRoot : Error {
  explicit BadRoot(const std::string& m) : Error(m) {}
};
struct RankDeficient : Error {
  explicit RankDeficient(const std::string& m) : Error(m) {}
};
struct NotDisconnected : Error {
  explicit NotDisconnected(const std::string& m) : Error(m) {}
};
struct CapacityExceeded : Error {
  explicit CapacityExceeded(const std::string& m) : Error(m) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& m) : Error(m) {}
};
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& m) : Error(m) {}
};
struct MalformedDescriptor : Error {
  explicit MalformedDescriptor(const std::string& m) : Error(m) {}
};
struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& m) : Error(m) {}
};
struct DefiningCharacteristic : Error {
  explicit DefiningCharacteristic(const std::string& m) : Error(m) {}
};

}  // namespace eap

#endif
