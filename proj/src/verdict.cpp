#include "hopfgen/verdict.hpp"

#include <sstream>

namespace hopfgen {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

void Verdict::absorb(const Verdict& other) {
  cases += other.cases;
  if (failed()) return;
  if (other.failed()) {
    status = Status::fail;
    witness = other.witness;
    lhs = other.lhs;
    rhs = other.rhs;
    note = other.check.empty() ? other.note : other.check + (other.note.empty() ? "" : ": " + other.note);
  } else if (other.status == Status::inconclusive) {
    status = Status::inconclusive;
  }
}

std::string Verdict::describe() const {
  std::ostringstream os;
  os << check << ": " << to_string(status) << " (" << cases << " cases)";
  if (failed()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << "): lhs = " << lhs << ", rhs = " << rhs;
  }
  if (!note.empty()) os << " [" << note << "]";
  return os.str();
}

}  // namespace hopfgen
