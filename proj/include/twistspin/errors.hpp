#pragma once

#include <stdexcept>
#include <string>

namespace twistspin {

// Base class for all input-validation failures raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Notation parsing.
class MalformedSyntax : public Error { public: using Error::Error; };
class ArityError : public Error { public: using Error::Error; };
class LabelError : public Error { public: using Error::Error; };
class MultiComponent : public Error { public: using Error::Error; };
class LetterOutOfRange : public Error { public: using Error::Error; };

// Two-bridge fractions.
class NotCoprime : public Error { public: using Error::Error; };
class EvenP : public Error { public: using Error::Error; };
class OutOfRange : public Error { public: using Error::Error; };

// Pipeline preconditions.
class ParityMismatch : public Error { public: using Error::Error; };

}  // namespace twistspin
