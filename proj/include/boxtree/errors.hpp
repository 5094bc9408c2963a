#pragma once

#include <stdexcept>
#include <string>

namespace boxtree {

enum class ErrorKind {
    Parse,
    Validation,
    Dimension,
    Capacity,
    EmptySubcontext,
    NotAnElement,
    ZeroInTree,
    NotATree,
    NotABoxExtent,
    NonstandardProblem,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define BOXTREE_DEFINE_ERROR(Name, Kind)                                          \
    class Name : public Error {                                                   \
    public:                                                                       \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}  \
    }

BOXTREE_DEFINE_ERROR(ParseError, Parse);
BOXTREE_DEFINE_ERROR(ValidationError, Validation);
BOXTREE_DEFINE_ERROR(DimensionError, Dimension);
BOXTREE_DEFINE_ERROR(CapacityError, Capacity);
BOXTREE_DEFINE_ERROR(EmptySubcontextError, EmptySubcontext);
BOXTREE_DEFINE_ERROR(NotAnElementError, NotAnElement);
BOXTREE_DEFINE_ERROR(ZeroInTreeError, ZeroInTree);
BOXTREE_DEFINE_ERROR(NotATreeError, NotATree);
BOXTREE_DEFINE_ERROR(NotABoxExtentError, NotABoxExtent);
BOXTREE_DEFINE_ERROR(NonstandardProblemError, NonstandardProblem);

#undef BOXTREE_DEFINE_ERROR

}  // namespace boxtree
