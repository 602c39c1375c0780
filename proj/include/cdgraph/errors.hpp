#pragma once

#include <stdexcept>
#include <string>

namespace cdgraph {

/** Malformed input: bad vertex ids, self-loops, unknown names, bad files. */
class InvalidInput : public std::runtime_error
{
  public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/** Operation requires a connected graph. */
class DisconnectedGraph : public InvalidInput
{
  public:
    explicit DisconnectedGraph(const std::string& what) : InvalidInput(what) {}
};

/** An exhaustive search would exceed its hard size cap. */
class CapExceeded : public std::runtime_error
{
  public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/** Output-sensitive enumeration ran past its configured budget. */
class BudgetExceeded : public std::runtime_error
{
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/** An internal consistency check failed; indicates a bug, not bad input. */
class InternalError : public std::logic_error
{
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cdgraph
