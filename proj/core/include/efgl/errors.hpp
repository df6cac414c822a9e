#ifndef EFGL_ERRORS_HPP
#define EFGL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace efgl {

// Base for all structured computational errors. `name()` is stable and is
// what the CLI prints and encodes in exit status 3.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct GroupMismatch : Error {
    explicit GroupMismatch(const std::string& what) : Error("GroupMismatch", what) {}
};

struct HorizonExceeded : Error {
    HorizonExceeded(long requested, long horizon)
        : Error("HorizonExceeded",
                "flag index " + std::to_string(requested) + " requested, horizon is " +
                    std::to_string(horizon) + "; enlarge the flag horizon"),
          requested(requested), horizon(horizon) {}
    long requested, horizon;
};

struct WindowExceeded : Error {
    WindowExceeded(long requested, long window)
        : Error("WindowExceeded",
                "basis index " + std::to_string(requested) + " needed, window is " +
                    std::to_string(window) + "; enlarge the window"),
          requested(requested), window(window) {}
    long requested, window;
};

struct CharacterNotInWindow : Error {
    explicit CharacterNotInWindow(const std::string& what) : Error("CharacterNotInWindow", what) {}
};

struct ConstantTermSubstitution : Error {
    explicit ConstantTermSubstitution(const std::string& what)
        : Error("ConstantTermSubstitution", what) {}
};

struct NonUnitLinearCoefficient : Error {
    explicit NonUnitLinearCoefficient(const std::string& what)
        : Error("NonUnitLinearCoefficient", what) {}
};

struct NonMonicRelation : Error {
    explicit NonMonicRelation(const std::string& what) : Error("NonMonicRelation", what) {}
};

struct ConversionDivergence : Error {
    explicit ConversionDivergence(const std::string& what)
        : Error("ConversionDivergence", what) {}
};

struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& what) : Error("ModelMismatch", what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

} // namespace efgl

#endif
