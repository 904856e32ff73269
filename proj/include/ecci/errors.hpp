#ifndef ECCI_ERRORS_HPP
#define ECCI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ecci {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Digraph construction
class LoopArc : public Error { public: using Error::Error; };
class DuplicateArc : public Error { public: using Error::Error; };
class VertexOutOfRange : public Error { public: using Error::Error; };
class EmptyVertexSet : public Error { public: using Error::Error; };

// Metric / index preconditions
class NotStronglyConnected : public Error { public: using Error::Error; };
class NotConnected : public Error { public: using Error::Error; };
class NotRegular : public Error { public: using Error::Error; };
class PreconditionViolated : public Error { public: using Error::Error; };

// Generators and search caps
class OrderTooSmall : public Error { public: using Error::Error; };
class OrderCapExceeded : public Error { public: using Error::Error; };
class CapExceeded : public Error { public: using Error::Error; };
class UnknownTheorem : public Error { public: using Error::Error; };
class RetriesExhausted : public Error { public: using Error::Error; };

// Edge-list parsing; carries the 1-based source line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }
private:
    int line_;
};

}  // namespace ecci

#endif
