/* error.hh -- exception types raised by the library.
 */

#ifndef PTSEP_ERROR_HH_
#define PTSEP_ERROR_HH_

#include <stdexcept>
#include <string>

namespace ptsep {

/// Base of every error thrown by ptsep.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A word uses a symbol that is not part of the automaton alphabet.
class UnknownSymbol : public Error {
public:
    explicit UnknownSymbol(const std::string& symbol)
        : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}
    const std::string& symbol() const noexcept { return symbol_; }
private:
    std::string symbol_;
};

/// A construction exceeded its configured state budget.
class ResourceLimit : public Error { public: using Error::Error; };

/// The chain did not stabilize within the configured number of levels.
class Undecided : public Error { public: using Error::Error; };

class NotSeparable : public Error { public: using Error::Error; };
class NoTower : public Error { public: using Error::Error; };
class NotUpwardClosed : public Error { public: using Error::Error; };
class InvalidPath : public Error { public: using Error::Error; };
class InvalidTower : public Error { public: using Error::Error; };
class PathNotFound : public Error { public: using Error::Error; };
class AmbiguousMembership : public Error { public: using Error::Error; };
class InvalidParameter : public Error { public: using Error::Error; };

/// Malformed automaton, tower or DOT document.
class ParseError : public Error { public: using Error::Error; };

} // namespace ptsep

#endif // PTSEP_ERROR_HH_
