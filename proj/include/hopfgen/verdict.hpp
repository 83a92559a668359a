#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfgen {

class NotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AntipodeMissing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A budget ran out before an answer was reached.
class Timeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two computations of the same quantity disagree; always an implementation bug.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { pass, fail, skipped, inconclusive };

const char* to_string(Status s);

// Outcome of an exhaustive identity check. A failing verdict always names the
// basis tuple where it failed and both sides as printed text.
struct Verdict {
  std::string check;
  Status status = Status::pass;
  std::size_t cases = 0;
  std::vector<std::string> witness;
  std::string lhs;
  std::string rhs;
  std::string note;

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }

  static Verdict skipped(std::string check, std::string why) {
    Verdict v;
    v.check = std::move(check);
    v.status = Status::skipped;
    v.note = std::move(why);
    return v;
  }

  void fail(std::vector<std::string> at, std::string left, std::string right) {
    status = Status::fail;
    witness = std::move(at);
    lhs = std::move(left);
    rhs = std::move(right);
  }

  // Combines sub-checks; the first failure wins.
  void absorb(const Verdict& other);

  std::string describe() const;
};

}  // namespace hopfgen
