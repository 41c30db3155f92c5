#ifndef MVF_ERRORS_HPP
#define MVF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mvf {

// Error taxonomy shared across the library. Everything derives from
// std::runtime_error so callers can catch coarsely; the distinct types exist
// because several of them map to different CLI exit paths.

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

// A quadrature node or stencil point escaped the grid's collar.
struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

// Right-hand side outside the operator's admissible regime (e.g. f < 0 for
// the Gauss-curvature-type equation, which is posed only for f >= 0).
struct InvalidRhs : std::runtime_error {
    explicit InvalidRhs(const std::string& what) : std::runtime_error(what) {}
};

// Time lookup before the stored initial collar.
struct InvalidWindow : std::runtime_error {
    explicit InvalidWindow(const std::string& what) : std::runtime_error(what) {}
};

// A game strategy returned a control outside the supplied family.
struct InvalidControl : std::runtime_error {
    explicit InvalidControl(const std::string& what) : std::runtime_error(what) {}
};

// Time marching produced a non-finite or absurdly large value.
struct Diverged : std::runtime_error {
    Diverged(const std::string& what, int level, long node)
        : std::runtime_error(what), level(level), node(node) {}
    int level;
    long node;
};

}  // namespace mvf

#endif
