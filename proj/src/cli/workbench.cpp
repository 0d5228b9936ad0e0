#include "conductor/cli/workbench.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "conductor/cli/expression.hpp"
#include "conductor/errors.hpp"

namespace conductor::cli {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw ValidationError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(path + "." + key, "missing field");
    return *it;
}

template <class T>
T get_as(const Json& v, const std::string& path) {
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ValidationError(path, "has the wrong type");
    }
}

template <class T>
T field(const Json& obj, const std::string& key, const std::string& path) {
    return get_as<T>(require(obj, key, path), path + "." + key);
}

template <class T>
T optional_field(const Json& obj, const std::string& key, const std::string& path, T fallback) {
    if (!obj.contains(key)) return fallback;
    return get_as<T>(obj.at(key), path + "." + key);
}

const Json& array_field(const Json& obj, const std::string& key, const std::string& path) {
    const Json& v = require(obj, key, path);
    if (!v.is_array()) throw ValidationError(path + "." + key, "expected an array");
    return v;
}

const Json& optional_array(const Json& obj, const std::string& key, const std::string& path) {
    static const Json empty = Json::array();
    if (!obj.contains(key)) return empty;
    if (!obj.at(key).is_array()) throw ValidationError(path + "." + key, "expected an array");
    return obj.at(key);
}

template <class F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ValidationError& e) {
        throw e.nested_in(path);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(path, e.what());
    }
}

template <class Map>
void insert_unique(Map& m, const std::string& name, typename Map::mapped_type value, const std::string& path) {
    if (!m.emplace(name, std::move(value)).second) throw ValidationError(path + ".name", "duplicate name '" + name + "'");
}

BaseDVR load_base(const Json& doc, std::optional<int> precision) {
    const std::string path = "base";
    const Json& b = require(doc, "base", "");
    const int p = field<int>(b, "characteristic", path);
    const std::string kind = optional_field<std::string>(b, "field", path, "prime");
    const int n = precision ? *precision : optional_field<int>(b, "precision", path, 32);
    if (n < 1) throw ValidationError(path + ".precision", "must be positive");
    if (p < 2 || !fp::is_prime(static_cast<std::uint32_t>(p)))
        throw ValidationError(path + ".characteristic", "must be a prime");
    const std::string pi = optional_field<std::string>(b, "uniformizer", path, "pi");
    if (kind == "prime") return BaseDVR(CoefficientField::prime_field(p), n, pi);
    if (kind == "rational-functions")
        return BaseDVR(CoefficientField::rational_functions(p, optional_field<std::string>(b, "variable", path, "t")),
                       n, pi);
    throw ValidationError(path + ".field", "expected 'prime' or 'rational-functions'");
}

Bindings generator_bindings(const Presentation& p) {
    Bindings b;
    for (const auto& g : p.generators) b.emplace(g.name, g.value);
    return b;
}

std::shared_ptr<const ExtensionData> build_extension(
    const Json& e, const std::string& path, const BaseDVR& base,
    const std::map<std::string, std::shared_ptr<const ExtensionData>>& built) {
    const std::string name = field<std::string>(e, "name", path);
    const std::string gen = field<std::string>(e, "generator", path);
    const Json& poly = array_field(e, "polynomial", path);
    if (poly.size() < 2) throw ValidationError(path + ".polynomial", "need a polynomial of degree at least 1");

    Presentation pres = [&] {
        if (e.contains("over")) {
            const auto& lower = built.at(field<std::string>(e, "over", path));
            const Presentation& lp = lower->presentation();
            const Bindings names = generator_bindings(lp);
            std::vector<AlgebraElement> g;
            for (std::size_t k = 0; k < poly.size(); ++k)
                g.push_back(with_path(at(path + ".polynomial", k), [&] {
                    return evaluate(get_as<std::string>(poly[k], at(path + ".polynomial", k)), lp.algebra, names);
                }));
            return with_path(path + ".polynomial", [&] { return tower_compositum(lp, g, gen); });
        }
        BasePolynomial f;
        for (std::size_t k = 0; k < poly.size(); ++k)
            f.push_back(with_path(at(path + ".polynomial", k), [&] {
                return evaluate_scalar(get_as<std::string>(poly[k], at(path + ".polynomial", k)), base);
            }));
        return with_path(path + ".polynomial", [&] { return monogenic_presentation(base, f, gen); });
    }();

    if (e.contains("basis")) {
        const Json& basis = array_field(e, "basis", path);
        const Bindings names = generator_bindings(pres);
        std::vector<AlgebraElement> elems;
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::string bp = at(path + ".basis", k);
            labels.push_back(field<std::string>(basis[k], "label", bp));
            elems.push_back(with_path(bp + ".value", [&] {
                return evaluate(field<std::string>(basis[k], "value", bp), pres.algebra, names);
            }));
        }
        pres = with_path(path + ".basis", [&] { return rebase(pres, elems, labels); });
    }

    ExtensionData::Options o;
    o.name = name;
    o.ramification_index = field<int>(e, "e", path);
    o.residue_degree = field<int>(e, "f", path);
    const Bindings own = generator_bindings(pres);
    o.uniformizer = with_path(path + ".uniformizer", [&] {
        return evaluate(field<std::string>(e, "uniformizer", path), pres.algebra, own);
    });
    if (e.contains("target")) o.target = built.at(field<std::string>(e, "target", path));
    const Presentation& target = o.target ? o.target->presentation() : pres;
    const Bindings target_names = generator_bindings(target);
    const Json& embs = array_field(e, "embeddings", path);
    for (std::size_t k = 0; k < embs.size(); ++k) {
        const std::string ep = at(path + ".embeddings", k);
        if (!embs[k].is_object()) throw ValidationError(ep, "expected an object of generator images");
        std::vector<AlgebraElement> images;
        for (const auto& g : pres.generators) {
            const std::string gp = ep + "." + g.name;
            images.push_back(with_path(gp, [&] {
                return evaluate(field<std::string>(embs[k], g.name, ep), target.algebra, target_names);
            }));
        }
        for (const auto& [key, _] : embs[k].items())
            if (!pres.has_generator(key)) throw ValidationError(ep + "." + key, "no generator of that name");
        o.generator_images.push_back(std::move(images));
    }
    for (const auto& a : optional_array(e, "assumptions", path)) o.assumptions.push_back(get_as<std::string>(a, path + ".assumptions"));
    return with_path(path, [&] { return ExtensionData::create(std::move(pres), std::move(o)); });
}

int resolve_element(const FiniteGroup& g, const Json& v, const std::string& path) {
    if (v.is_number_integer()) {
        const int i = v.get<int>();
        if (i < 0 || i >= g.order()) throw ValidationError(path, "element index out of range");
        return i;
    }
    if (v.is_string()) {
        const auto& labels = g.labels();
        auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
        if (it == labels.end()) throw ValidationError(path, "no element labelled '" + v.get<std::string>() + "'");
        return static_cast<int>(it - labels.begin());
    }
    throw ValidationError(path, "expected an element index or label");
}

std::vector<int> resolve_subset(const FiniteGroup& g, const Json& v, const std::string& path) {
    if (!v.is_array()) throw ValidationError(path, "expected an array of elements");
    std::set<int> s;
    for (std::size_t k = 0; k < v.size(); ++k) s.insert(resolve_element(g, v[k], at(path, k)));
    return {s.begin(), s.end()};
}

IntMatrix int_matrix(const Json& v, const std::string& path) {
    auto rows = get_as<std::vector<std::vector<std::int64_t>>>(v, path);
    try {
        return intmat::from_rows(rows);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(path, e.what());
    }
}

template <class E, class Eval>
Matrix<E> ring_matrix(const Json& v, std::size_t rows, std::size_t cols, const E& zero, const std::string& path,
                      Eval&& eval) {
    if (!v.is_array() || v.size() != rows)
        throw ValidationError(path, "expected " + std::to_string(rows) + " rows");
    Matrix<E> m(rows, cols, zero);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            throw ValidationError(at(path, i), "expected " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) {
            const std::string ep = at(at(path, i), j);
            m(i, j) = with_path(ep, [&] { return eval(get_as<std::string>(v[i][j], ep)); });
        }
    }
    return m;
}

}  // namespace

int Workbench::declared_precision(const Json& doc) {
    if (doc.is_object() && doc.contains("base") && doc["base"].is_object() && doc["base"].contains("precision") &&
        doc["base"]["precision"].is_number_integer())
        return doc["base"]["precision"].get<int>();
    return 32;
}

Workbench Workbench::load(const Json& doc, std::optional<int> precision) {
    if (!doc.is_object()) throw ValidationError("", "input must be a JSON object");
    Workbench w;
    w.base_ = load_base(doc, precision);

    // Extensions in dependency order.
    const Json& exts = optional_array(doc, "extensions", "");
    std::set<std::string> names;
    for (std::size_t k = 0; k < exts.size(); ++k) {
        const std::string n = field<std::string>(exts[k], "name", at("extensions", k));
        if (!names.insert(n).second) throw ValidationError(at("extensions", k) + ".name", "duplicate name '" + n + "'");
    }
    for (std::size_t k = 0; k < exts.size(); ++k)
        for (const char* ref : {"over", "target"})
            if (exts[k].contains(ref)) {
                const std::string r = field<std::string>(exts[k], ref, at("extensions", k));
                if (!names.count(r))
                    throw ValidationError(at("extensions", k) + "." + ref, "unknown extension '" + r + "'");
            }
    std::vector<bool> done(exts.size(), false);
    for (std::size_t built = 0; built < exts.size();) {
        bool progress = false;
        for (std::size_t k = 0; k < exts.size(); ++k) {
            if (done[k]) continue;
            bool ready = true;
            for (const char* ref : {"over", "target"})
                if (exts[k].contains(ref) && !w.extensions_.count(exts[k][ref].get<std::string>())) ready = false;
            if (!ready) continue;
            auto ext = build_extension(exts[k], at("extensions", k), *w.base_, w.extensions_);
            w.extensions_.emplace(ext->name(), std::move(ext));
            done[k] = true;
            ++built;
            progress = true;
        }
        if (!progress) throw ValidationError("extensions", "'over'/'target' references form a cycle");
    }

    // Galois data.
    if (doc.contains("galois")) {
        const Json& g = doc["galois"];
        const Json& groups = optional_array(g, "groups", "galois");
        for (std::size_t k = 0; k < groups.size(); ++k) {
            const std::string path = at("galois.groups", k);
            const Json& e = groups[k];
            const std::string n = field<std::string>(e, "name", path);
            FiniteGroup grp = with_path(path, [&]() -> FiniteGroup {
                if (e.contains("klein_four")) return FiniteGroup::klein_four();
                if (e.contains("cyclic")) {
                    const int m = field<int>(e, "cyclic", path);
                    if (m < 1 || m > FiniteGroup::max_order) throw ValidationError("cyclic", "order out of range");
                    return FiniteGroup::cyclic(m, optional_field<std::string>(e, "generator", path, "s"));
                }
                if (e.contains("product")) {
                    auto parts = field<std::vector<std::string>>(e, "product", path);
                    if (parts.size() != 2) throw ValidationError("product", "expected two group names");
                    for (const auto& p : parts)
                        if (!w.groups_.count(p)) throw ValidationError("product", "unknown group '" + p + "'");
                    return FiniteGroup::product(w.groups_.at(parts[0]), w.groups_.at(parts[1]));
                }
                return FiniteGroup(field<std::vector<std::vector<int>>>(e, "table", path),
                                   optional_field<int>(e, "identity", path, 0),
                                   optional_field<std::vector<std::string>>(e, "labels", path, {}));
            });
            insert_unique(w.groups_, n, std::move(grp), path);
        }
        const Json& lattices = optional_array(g, "lattices", "galois");
        for (std::size_t k = 0; k < lattices.size(); ++k) {
            const std::string path = at("galois.lattices", k);
            const Json& e = lattices[k];
            const std::string n = field<std::string>(e, "name", path);
            const std::string gn = field<std::string>(e, "group", path);
            if (!w.groups_.count(gn)) throw ValidationError(path + ".group", "unknown group '" + gn + "'");
            const FiniteGroup& grp = w.groups_.at(gn);
            const std::string role_tag = optional_field<std::string>(e, "role", path, "characters");
            if (role_tag != "characters" && role_tag != "cocharacters")
                throw ValidationError(path + ".role", "expected 'characters' or 'cocharacters'");
            const LatticeRole role = role_tag == "characters" ? LatticeRole::Characters : LatticeRole::Cocharacters;
            GLattice lat = with_path(path, [&]() -> GLattice {
                if (e.contains("regular")) return GLattice::regular(grp).with_role(role);
                if (e.contains("trivial"))
                    return GLattice::trivial(grp, field<std::size_t>(e, "trivial", path)).with_role(role);
                if (e.contains("permutation"))
                    return GLattice::permutation(grp, resolve_subset(grp, e["permutation"], path + ".permutation"))
                        .with_role(role);
                if (e.contains("generators")) {
                    const Json& gens = array_field(e, "generators", path);
                    const Json& imgs = array_field(e, "images", path);
                    std::vector<int> gi;
                    std::vector<IntMatrix> mi;
                    for (std::size_t j = 0; j < gens.size(); ++j) gi.push_back(resolve_element(grp, gens[j], at(path + ".generators", j)));
                    for (std::size_t j = 0; j < imgs.size(); ++j) mi.push_back(int_matrix(imgs[j], at(path + ".images", j)));
                    return GLattice::from_generators(grp, gi, mi, role);
                }
                const Json& acts = array_field(e, "action", path);
                std::vector<IntMatrix> mats;
                for (std::size_t j = 0; j < acts.size(); ++j) mats.push_back(int_matrix(acts[j], at(path + ".action", j)));
                return GLattice(grp, std::move(mats), role);
            });
            insert_unique(w.lattices_, n, std::move(lat), path);
        }
        const Json& filtrations = optional_array(g, "filtrations", "galois");
        for (std::size_t k = 0; k < filtrations.size(); ++k) {
            const std::string path = at("galois.filtrations", k);
            const Json& e = filtrations[k];
            const std::string n = field<std::string>(e, "name", path);
            const std::string gn = field<std::string>(e, "group", path);
            if (!w.groups_.count(gn)) throw ValidationError(path + ".group", "unknown group '" + gn + "'");
            RamificationData r{w.groups_.at(gn), {}};
            const Json& chain = array_field(e, "chain", path);
            for (std::size_t j = 0; j < chain.size(); ++j) r.chain.push_back(resolve_subset(r.group, chain[j], at(path + ".chain", j)));
            with_path(path, [&] { r.validate(); });
            insert_unique(w.filtrations_, n, std::move(r), path);
        }
    }

    const Json& tori = optional_array(doc, "tori", "");
    for (std::size_t k = 0; k < tori.size(); ++k) {
        const std::string path = at("tori", k);
        const Json& e = tori[k];
        TorusEntry t;
        t.name = field<std::string>(e, "name", path);
        t.kind = field<std::string>(e, "kind", path);
        auto ext_ref = [&](const std::string& key) {
            const std::string r = field<std::string>(e, key, path);
            if (!w.extensions_.count(r)) throw ValidationError(path + "." + key, "unknown extension '" + r + "'");
            return r;
        };
        if (t.kind == "induced") {
            t.extension = ext_ref("extension");
            if (e.contains("splitting")) {
                const std::string s = ext_ref("splitting");
                if (!w.extensions_.at(t.extension)->embeds_into(*w.extensions_.at(s)))
                    throw ValidationError(path + ".splitting", "embeddings of '" + t.extension + "' do not land in '" + s + "'");
            }
        } else if (t.kind == "resolution") {
            t.inner = ext_ref("inner");
            t.outer = ext_ref("outer");
            t.citation = optional_field<std::string>(e, "citation", path, "");
            if (t.citation.empty())
                throw ValidationError(path + ".citation", "resolution exactness is an assumption and needs a citation");
            t.lattice = optional_field<std::string>(e, "lattice", path, "");
            if (!t.lattice.empty() && !w.lattices_.count(t.lattice))
                throw ValidationError(path + ".lattice", "unknown lattice '" + t.lattice + "'");
        } else {
            throw ValidationError(path + ".kind", "expected 'induced' or 'resolution'");
        }
        insert_unique(w.tori_, t.name, t, path);
    }

    const Json& complexes = optional_array(doc, "complexes", "");
    for (std::size_t k = 0; k < complexes.size(); ++k) {
        const std::string path = at("complexes", k);
        const Json& e = complexes[k];
        const std::string n = field<std::string>(e, "name", path);
        const std::string ring = optional_field<std::string>(e, "ring", path, "O_K");
        const int first = optional_field<int>(e, "first_degree", path, 1);
        const auto ranks = field<std::vector<std::size_t>>(e, "ranks", path);
        if (ranks.empty()) throw ValidationError(path + ".ranks", "complex has no terms");
        const Json& diffs = array_field(e, "differentials", path);
        if (diffs.size() + 1 != ranks.size())
            throw ValidationError(path + ".differentials",
                                  "expected " + std::to_string(ranks.size() - 1) + " differentials");
        ComplexEntry c{n, ring, BoundedComplex<Series>{}};
        if (ring == "O_K") {
            BoundedComplex<Series> bc{first, ranks, {}};
            for (std::size_t j = 0; j < diffs.size(); ++j)
                bc.differentials.push_back(ring_matrix<Series>(
                    diffs[j], ranks[j + 1], ranks[j], w.base_->zero(), at(path + ".differentials", j),
                    [&](const std::string& s) { return evaluate_scalar(s, *w.base_); }));
            with_path(path, [&] { validate_complex(BaseRing(*w.base_), bc); });
            c.complex = std::move(bc);
        } else {
            if (!w.extensions_.count(ring)) throw ValidationError(path + ".ring", "unknown ring '" + ring + "'");
            const auto& ext = w.extensions_.at(ring);
            const Bindings names = generator_bindings(ext->presentation());
            BoundedComplex<AlgebraElement> bc{first, ranks, {}};
            for (std::size_t j = 0; j < diffs.size(); ++j)
                bc.differentials.push_back(ring_matrix<AlgebraElement>(
                    diffs[j], ranks[j + 1], ranks[j], ext->algebra().zero(), at(path + ".differentials", j),
                    [&](const std::string& s) { return evaluate(s, ext->algebra(), names); }));
            with_path(path, [&] { validate_complex(ExtensionRing(ext), bc); });
            c.complex = std::move(bc);
        }
        insert_unique(w.complexes_, n, std::move(c), path);
    }
    return w;
}

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const std::string& what) {
    auto it = m.find(name);
    if (it == m.end()) throw ValidationError(what, "no entry named '" + name + "'");
    return it->second;
}

}  // namespace

std::shared_ptr<const ExtensionData> Workbench::extension(const std::string& name) const {
    return lookup(extensions_, name, "extensions");
}
const TorusEntry& Workbench::torus(const std::string& name) const { return lookup(tori_, name, "tori"); }
const ComplexEntry& Workbench::complex(const std::string& name) const { return lookup(complexes_, name, "complexes"); }
const GLattice& Workbench::lattice(const std::string& name) const { return lookup(lattices_, name, "galois.lattices"); }
const RamificationData& Workbench::filtration(const std::string& name) const {
    return lookup(filtrations_, name, "galois.filtrations");
}
const FiniteGroup& Workbench::group(const std::string& name) const { return lookup(groups_, name, "galois.groups"); }

}  // namespace conductor::cli
