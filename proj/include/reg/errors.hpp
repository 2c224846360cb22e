#pragma once

#include <stdexcept>
#include <string>

namespace reg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input text holds no sentence.
class EmptyDocument : public Error {
 public:
  EmptyDocument() : Error("document contains no sentence") {}
};

class UnknownTerm : public Error {
 public:
  explicit UnknownTerm(const std::string& term)
      : Error("term has no vocabulary id: " + term) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Every reference summary produced zero grams; ROUGE is undefined.
class EmptyReference : public Error {
 public:
  EmptyReference() : Error("all references are empty at the requested gram order") {}
};

/// A language resource (stoplist, abbreviation list, corpus file) could not be resolved.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace reg
