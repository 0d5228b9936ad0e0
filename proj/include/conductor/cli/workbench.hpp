#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "conductor/artin.hpp"
#include "conductor/complex.hpp"
#include "conductor/extension.hpp"
#include "conductor/lattice.hpp"

namespace conductor::cli {

using Json = nlohmann::ordered_json;

struct TorusEntry {
    std::string name;
    std::string kind;  // "induced" or "resolution"
    std::string extension;
    std::string inner;
    std::string outer;
    std::string citation;
    std::string lattice;  // optional quotient lattice witness
};

struct ComplexEntry {
    std::string name;
    std::string ring;  // "O_K" or an extension name
    std::variant<BoundedComplex<Series>, BoundedComplex<AlgebraElement>> complex;
};

// A validated input document. Extensions may refer to each other through
// "over" (towers) and "target" (where embeddings land) in any order; they
// are built once all their dependencies are.
class Workbench {
  public:
    // `precision` overrides base.precision when given.
    static Workbench load(const Json& doc, std::optional<int> precision = std::nullopt);
    // Precision requested by the document (32 when absent).
    static int declared_precision(const Json& doc);

    const BaseDVR& base() const { return *base_; }

    std::shared_ptr<const ExtensionData> extension(const std::string& name) const;
    const TorusEntry& torus(const std::string& name) const;
    const ComplexEntry& complex(const std::string& name) const;
    const GLattice& lattice(const std::string& name) const;
    const RamificationData& filtration(const std::string& name) const;
    const FiniteGroup& group(const std::string& name) const;

  private:
    std::optional<BaseDVR> base_;
    std::map<std::string, std::shared_ptr<const ExtensionData>> extensions_;
    std::map<std::string, TorusEntry> tori_;
    std::map<std::string, ComplexEntry> complexes_;
    std::map<std::string, FiniteGroup> groups_;
    std::map<std::string, GLattice> lattices_;
    std::map<std::string, RamificationData> filtrations_;
};

}  // namespace conductor::cli
