#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdlat {

// Base of every error the library throws. Callers that only care about
// "bad input" vs "bug" can catch this and inspect nothing else.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClosureExceedsCap : public Error {
 public:
  ClosureExceedsCap(std::size_t cap, const std::string& what_)
      : Error(what_ + " exceeds the order cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class LatticeExceedsCap : public Error {
 public:
  explicit LatticeExceedsCap(std::size_t cap)
      : Error("subgroup count exceeds the subgroup cap of " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

// Raised by table validation; `axiom` names the first violated law and the
// witness triple (a, b, c) is meaningful for that law (unused slots are 0).
class NotAGroup : public Error {
 public:
  NotAGroup(std::string axiom, std::size_t a, std::size_t b, std::size_t c)
      : Error("not a group: " + axiom + " fails at (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")"),
        axiom_(std::move(axiom)),
        a_(a),
        b_(b),
        c_(c) {}
  const std::string& axiom() const { return axiom_; }
  std::size_t a() const { return a_; }
  std::size_t b() const { return b_; }
  std::size_t c() const { return c_; }

 private:
  std::string axiom_;
  std::size_t a_, b_, c_;
};

class NotNormal : public Error {
 public:
  explicit NotNormal(std::size_t conjugator)
      : Error("subgroup is not normal; conjugation by element " + std::to_string(conjugator) +
              " moves it"),
        conjugator_(conjugator) {}
  std::size_t conjugator() const { return conjugator_; }

 private:
  std::size_t conjugator_;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class PreconditionUnmet : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cdlat
