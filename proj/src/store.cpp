#include "repstab/store.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

namespace repstab::store {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::SchemaError, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema_error(path, std::string("missing field '") + key + "'");
    return *it;
}

const Json* optional_field(const Json& j, const char* key) {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

void expect_array(const Json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array");
}

int int_from_json(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_error(path, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) schema_error(path, "integer out of range");
    return static_cast<int>(v);
}

std::string string_from_json(const Json& j, const std::string& path) {
    if (!j.is_string()) schema_error(path, "expected a string");
    return j.get<std::string>();
}

bool bool_from_json(const Json& j, const std::string& path) {
    if (!j.is_boolean()) schema_error(path, "expected a boolean");
    return j.get<bool>();
}

Parity parity_from_json(const Json& j, const std::string& path) {
    const auto text = string_from_json(j, path);
    if (text == "even") return Parity::even;
    if (text == "odd") return Parity::odd;
    schema_error(path, "parity must be \"even\" or \"odd\"");
}

std::string at(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }
std::string at(const std::string& path, int index) { return at(path, static_cast<std::size_t>(index)); }
std::string at(const std::string& path, const char* key) { return path + "." + key; }

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<int> optional_int_from_json(const Json& j, const char* key, const std::string& path) {
    const Json* f = optional_field(j, key);
    if (!f || f->is_null()) return std::nullopt;
    return int_from_json(*f, at(path, key));
}

Json multiset_to_json(const GeneratorMultiset& m) {
    Json out = Json::array();
    for (const auto& [lambda, count] : m) out.push_back(Json::array({to_json(lambda), to_json(count)}));
    return out;
}

GeneratorMultiset multiset_from_json(const Json& j, const std::string& path) {
    expect_array(j, path);
    GeneratorMultiset out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto p = at(path, i);
        if (!j[i].is_array() || j[i].size() != 2) schema_error(p, "expected [partition, multiplicity]");
        const Partition lambda = partition_from_json(j[i][0], at(p, 0));
        const BigInt count = bigint_from_json(j[i][1], at(p, 1));
        if (count < 0) throw Error(ErrorCode::InvariantViolation, at(p, 1) + ": negative multiplicity");
        if (!out.emplace(lambda, count).second) throw Error(ErrorCode::InvariantViolation, p + ": duplicate partition");
    }
    return out;
}

Json strings_to_json(const std::vector<std::string>& v) { return Json(v); }

std::vector<std::string> strings_from_json(const Json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_from_json(j[i], at(path, i)));
    return out;
}

}  // namespace

Json to_json(const BigInt& value) {
    if (value.fits_slong_p()) return Json(static_cast<std::int64_t>(value.get_si()));
    return Json(value.get_str());
}

BigInt bigint_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        BigInt v;
        if (v.set_str(j.get<std::string>(), 10) != 0) schema_error(path, "not a decimal integer");
        return v;
    }
    schema_error(path, "expected an integer");
}

Json to_json(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    return Json::array({to_json(BigInt(q.get_num())), to_json(BigInt(q.get_den()))});
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) schema_error(path, "expected [numerator, denominator]");
    const BigInt num = bigint_from_json(j[0], at(path, 0));
    const BigInt den = bigint_from_json(j[1], at(path, 1));
    if (den <= 0) throw Error(ErrorCode::InvariantViolation, at(path, 1) + ": denominator must be positive");
    Rational q(num, den);
    q.canonicalize();
    if (q.get_den() != den) throw Error(ErrorCode::InvariantViolation, path + ": rational not in lowest terms");
    return q;
}

Json to_json(const Partition& value) { return Json(value.parts()); }

Partition partition_from_json(const Json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<int> parts;
    for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(int_from_json(j[i], at(path, i)));
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw Error(ErrorCode::InvariantViolation, path + ": " + e.what());
    }
}

Json to_json(const SymRep& value) {
    Json mults = Json::array();
    for (const auto& [lambda, count] : value.multiplicities()) mults.push_back(Json::array({to_json(lambda), to_json(count)}));
    return Json{{"n", value.rank()}, {"mults", mults}};
}

SymRep symrep_from_json(const Json& j, const std::string& path) {
    const int n = int_from_json(field(j, "n", path), at(path, "n"));
    if (n < 0) throw Error(ErrorCode::InvariantViolation, at(path, "n") + ": negative rank");
    const auto mpath = at(path, "mults");
    const auto multiset = multiset_from_json(field(j, "mults", path), mpath);
    SymRep out(n);
    std::size_t index = 0;
    for (const auto& [lambda, count] : multiset) {
        if (lambda.size() != n) {
            throw Error(ErrorCode::InvariantViolation, at(mpath, index) + ": " + lambda.to_string() + " is not a partition of " + std::to_string(n));
        }
        out.add(lambda, count);
        ++index;
    }
    return out;
}

Json to_json(const CharacterVector& value) {
    Json values = Json::array();
    for (const auto& v : value.values) values.push_back(to_json(v));
    return Json{{"n", value.n}, {"values", values}};
}

CharacterVector character_from_json(const Json& j, const std::string& path) {
    CharacterVector chi;
    chi.n = int_from_json(field(j, "n", path), at(path, "n"));
    const auto& values = field(j, "values", path);
    expect_array(values, at(path, "values"));
    const std::size_t expected = conjugacy_classes(chi.n).classes.size();
    if (values.size() != expected) {
        throw Error(ErrorCode::InvariantViolation, at(path, "values") + ": expected " + std::to_string(expected) + " class values");
    }
    for (std::size_t i = 0; i < values.size(); ++i) chi.values.push_back(rational_from_json(values[i], at(at(path, "values"), i)));
    return chi;
}

Json to_json(const CharacterTable& value) {
    Json labels = Json::array(), rows = Json::array(), classes = Json::array();
    for (const auto& l : value.labels) labels.push_back(to_json(l));
    for (const auto& r : value.rows) {
        Json row = Json::array();
        for (const auto& v : r.values) row.push_back(to_json(v));
        rows.push_back(row);
    }
    const auto& data = conjugacy_classes(value.n);
    for (const auto& c : data.classes) classes.push_back(Json{{"cycle_type", to_json(c.cycle_type)}, {"size", to_json(c.size)}});
    return Json{{"n", value.n}, {"labels", labels}, {"classes", classes}, {"rows", rows}};
}

CharacterTable chartab_from_json(const Json& j, const std::string& path) {
    CharacterTable table;
    table.n = int_from_json(field(j, "n", path), at(path, "n"));
    const auto expected_labels = enumerate_partitions(table.n);
    const auto& data = conjugacy_classes(table.n);
    const auto& labels = field(j, "labels", path);
    const auto& rows = field(j, "rows", path);
    const auto& classes = field(j, "classes", path);
    expect_array(labels, at(path, "labels"));
    expect_array(rows, at(path, "rows"));
    expect_array(classes, at(path, "classes"));
    if (labels.size() != expected_labels.size() || rows.size() != expected_labels.size() || classes.size() != data.classes.size()) {
        throw Error(ErrorCode::InvariantViolation, path + ": table shape does not match n = " + std::to_string(table.n));
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto p = at(at(path, "classes"), i);
        if (partition_from_json(field(classes[i], "cycle_type", p), at(p, "cycle_type")) != data.classes[i].cycle_type ||
            bigint_from_json(field(classes[i], "size", p), at(p, "size")) != data.classes[i].size) {
            throw Error(ErrorCode::InvariantViolation, p + ": class does not match the canonical class list");
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        Partition lambda = partition_from_json(labels[i], at(at(path, "labels"), i));
        if (lambda != expected_labels[i]) throw Error(ErrorCode::InvariantViolation, at(at(path, "labels"), i) + ": labels out of canonical order");
        table.labels.push_back(std::move(lambda));
        const auto rpath = at(at(path, "rows"), i);
        expect_array(rows[i], rpath);
        if (rows[i].size() != data.classes.size()) throw Error(ErrorCode::InvariantViolation, rpath + ": wrong row length");
        CharacterVector row{table.n, {}};
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            Rational v = rational_from_json(rows[i][c], at(rpath, c));
            if (v.get_den() != 1) throw Error(ErrorCode::InvariantViolation, at(rpath, c) + ": character values are integers");
            row.values.push_back(std::move(v));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Json to_json(const linalg::Matrix& value) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < value.rows(); ++r)
        for (std::size_t c = 0; c < value.cols(); ++c)
            if (value(r, c) != 0) entries.push_back(Json::array({r, c, to_json(value(r, c))}));
    return Json{{"rows", value.rows()}, {"cols", value.cols()}, {"entries", entries}};
}

linalg::Matrix matrix_from_json(const Json& j, const std::string& path) {
    const int rows = int_from_json(field(j, "rows", path), at(path, "rows"));
    const int cols = int_from_json(field(j, "cols", path), at(path, "cols"));
    if (rows < 0 || cols < 0) throw Error(ErrorCode::InvariantViolation, path + ": negative matrix dimension");
    linalg::Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    const auto& entries = field(j, "entries", path);
    const auto epath = at(path, "entries");
    expect_array(entries, epath);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto p = at(epath, i);
        if (!entries[i].is_array() || entries[i].size() != 3) schema_error(p, "expected [row, col, value]");
        const int r = int_from_json(entries[i][0], at(p, 0));
        const int c = int_from_json(entries[i][1], at(p, 1));
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw Error(ErrorCode::InvariantViolation, p + ": entry outside the matrix");
        m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = rational_from_json(entries[i][2], at(p, 2));
    }
    return m;
}

namespace {

Json metadata_to_json(const TableMetadata& meta) {
    Json notes = Json::object();
    for (const auto& [k, v] : meta.notes) notes[k] = v;
    return Json{{"weight_bound", optional_int(meta.weight_bound)},
                {"generation_bound", optional_int(meta.generation_bound)},
                {"stability_bound", optional_int(meta.stability_bound)},
                {"notes", notes}};
}

TableMetadata metadata_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) schema_error(path, "expected an object");
    TableMetadata meta;
    meta.weight_bound = optional_int_from_json(j, "weight_bound", path);
    meta.generation_bound = optional_int_from_json(j, "generation_bound", path);
    meta.stability_bound = optional_int_from_json(j, "stability_bound", path);
    if (const Json* notes = optional_field(j, "notes")) {
        if (!notes->is_object()) schema_error(at(path, "notes"), "expected an object");
        for (const auto& [k, v] : notes->items()) meta.notes[k] = string_from_json(v, at(at(path, "notes"), k.c_str()));
    }
    return meta;
}

}  // namespace

Json to_json(const FIModuleTable& value) {
    Json levels = Json::array();
    for (const auto& level : value.levels()) levels.push_back(to_json(level));
    return Json{{"name", value.name()},
                {"fi_sharp", value.fi_sharp()},
                {"max_n", value.max_n()},
                {"levels", levels},
                {"metadata", metadata_to_json(value.metadata())}};
}

FIModuleTable fimod_from_json(const Json& j, const std::string& path) {
    const auto name = string_from_json(field(j, "name", path), at(path, "name"));
    const bool fi_sharp = bool_from_json(field(j, "fi_sharp", path), at(path, "fi_sharp"));
    const int max_n = int_from_json(field(j, "max_n", path), at(path, "max_n"));
    const auto& levels_json = field(j, "levels", path);
    const auto lpath = at(path, "levels");
    expect_array(levels_json, lpath);
    if (static_cast<int>(levels_json.size()) != max_n + 1) {
        throw Error(ErrorCode::InvariantViolation, lpath + ": expected max_n + 1 = " + std::to_string(max_n + 1) + " levels");
    }
    std::vector<SymRep> levels;
    for (std::size_t n = 0; n < levels_json.size(); ++n) {
        SymRep level = symrep_from_json(levels_json[n], at(lpath, n));
        if (level.rank() != static_cast<int>(n)) throw Error(ErrorCode::InvariantViolation, at(lpath, n) + ": level rank must equal its index");
        levels.push_back(std::move(level));
    }
    TableMetadata meta;
    if (const Json* m = optional_field(j, "metadata")) meta = metadata_from_json(*m, at(path, "metadata"));
    return FIModuleTable(name, fi_sharp, std::move(levels), std::move(meta));
}

Json to_json(const ConsistentSequence& value) {
    Json levels = Json::array();
    for (const auto& level : value.levels) {
        Json gens = Json::array();
        for (const auto& g : level.generators) gens.push_back(to_json(g));
        Json entry{{"dimension", level.dimension}, {"generators", gens}};
        if (level.phi.rows() != 0 || level.phi.cols() != 0) entry["phi"] = to_json(level.phi);
        levels.push_back(entry);
    }
    return Json{{"name", value.name}, {"levels", levels}};
}

ConsistentSequence sequence_from_json(const Json& j, const std::string& path) {
    ConsistentSequence seq;
    seq.name = string_from_json(field(j, "name", path), at(path, "name"));
    const auto& levels = field(j, "levels", path);
    const auto lpath = at(path, "levels");
    expect_array(levels, lpath);
    for (std::size_t n = 0; n < levels.size(); ++n) {
        const auto p = at(lpath, n);
        ConsistentSequence::Level level;
        const int dim = int_from_json(field(levels[n], "dimension", p), at(p, "dimension"));
        if (dim < 0) throw Error(ErrorCode::InvariantViolation, at(p, "dimension") + ": negative dimension");
        level.dimension = static_cast<std::size_t>(dim);
        const auto& gens = field(levels[n], "generators", p);
        expect_array(gens, at(p, "generators"));
        if (gens.size() != (n == 0 ? 0 : n - 1)) throw Error(ErrorCode::InvariantViolation, at(p, "generators") + ": expected n-1 generators");
        for (std::size_t g = 0; g < gens.size(); ++g) {
            auto m = matrix_from_json(gens[g], at(at(p, "generators"), g));
            if (m.rows() != level.dimension || m.cols() != level.dimension) {
                throw Error(ErrorCode::InvariantViolation, at(at(p, "generators"), g) + ": generator must be square of the level dimension");
            }
            level.generators.push_back(std::move(m));
        }
        if (const Json* phi = optional_field(levels[n], "phi")) level.phi = matrix_from_json(*phi, at(p, "phi"));
        seq.levels.push_back(std::move(level));
    }
    for (std::size_t n = 0; n + 1 < seq.levels.size(); ++n) {
        const auto& phi = seq.levels[n].phi;
        if (phi.cols() != seq.levels[n].dimension || phi.rows() != seq.levels[n + 1].dimension) {
            throw Error(ErrorCode::InvariantViolation, at(at(lpath, n), "phi") + ": phi must map level n to level n+1");
        }
    }
    return seq;
}

Json to_json(const RepStabReport& value) {
    return Json{{"claimed_range", value.claimed_range},
                {"passed", value.passed},
                {"onset", value.onset},
                {"onset_defined_labels", value.onset_defined_labels},
                {"observed_max_n", value.observed_max_n},
                {"extended_by_classification", value.extended_by_classification},
                {"stable_multiplicities", multiset_to_json(value.stable_multiplicities)},
                {"injective_from", optional_int(value.injective_from)},
                {"spanning_from", optional_int(value.spanning_from)},
                {"coxeter_relations_hold", value.coxeter_relations_hold},
                {"equivariant", value.equivariant},
                {"failures", strings_to_json(value.failures)}};
}

RepStabReport report_from_json(const Json& j, const std::string& path) {
    RepStabReport r;
    r.claimed_range = int_from_json(field(j, "claimed_range", path), at(path, "claimed_range"));
    r.passed = bool_from_json(field(j, "passed", path), at(path, "passed"));
    r.onset = int_from_json(field(j, "onset", path), at(path, "onset"));
    r.onset_defined_labels = int_from_json(field(j, "onset_defined_labels", path), at(path, "onset_defined_labels"));
    r.observed_max_n = int_from_json(field(j, "observed_max_n", path), at(path, "observed_max_n"));
    r.extended_by_classification = bool_from_json(field(j, "extended_by_classification", path), at(path, "extended_by_classification"));
    r.stable_multiplicities = multiset_from_json(field(j, "stable_multiplicities", path), at(path, "stable_multiplicities"));
    r.injective_from = optional_int_from_json(j, "injective_from", path);
    r.spanning_from = optional_int_from_json(j, "spanning_from", path);
    r.coxeter_relations_hold = bool_from_json(field(j, "coxeter_relations_hold", path), at(path, "coxeter_relations_hold"));
    r.equivariant = bool_from_json(field(j, "equivariant", path), at(path, "equivariant"));
    r.failures = strings_from_json(field(j, "failures", path), at(path, "failures"));
    return r;
}

Json to_json(const GradedPieceRep& value) {
    return Json{{"generators", Json{{"count", value.gens.count}, {"d", value.gens.degree}, {"m", value.gens.m}}},
                {"effective_parity", to_string(value.gens.effective_parity())},
                {"weight", value.weight},
                {"internal_degree", value.internal_degree},
                {"action", to_json(value.action)}};
}

GradedPieceRep lie_piece_from_json(const Json& j, const std::string& path) {
    GradedPieceRep piece;
    const auto& g = field(j, "generators", path);
    const auto gpath = at(path, "generators");
    piece.gens.count = int_from_json(field(g, "count", gpath), at(gpath, "count"));
    piece.gens.degree = int_from_json(field(g, "d", gpath), at(gpath, "d"));
    piece.gens.m = int_from_json(field(g, "m", gpath), at(gpath, "m"));
    try {
        piece.gens.validate();
    } catch (const Error& e) {
        throw Error(ErrorCode::InvariantViolation, gpath + ": " + e.what());
    }
    piece.weight = int_from_json(field(j, "weight", path), at(path, "weight"));
    piece.internal_degree = int_from_json(field(j, "internal_degree", path), at(path, "internal_degree"));
    if (piece.weight < 1 || piece.internal_degree != piece.gens.internal_degree(piece.weight)) {
        throw Error(ErrorCode::InvariantViolation, at(path, "internal_degree") + ": must equal wd + (w-1)(m-1)");
    }
    if (parity_from_json(field(j, "effective_parity", path), at(path, "effective_parity")) != piece.gens.effective_parity()) {
        throw Error(ErrorCode::InvariantViolation, at(path, "effective_parity") + ": must equal (d+m-1) mod 2");
    }
    piece.action = symrep_from_json(field(j, "action", path), at(path, "action"));
    if (piece.action.rank() != piece.gens.count) throw Error(ErrorCode::InvariantViolation, at(path, "action") + ": rank must equal the generator count");
    return piece;
}

Json to_json(const DKGradedPiece& value) {
    return Json{{"k", value.k},
                {"parity", to_string(value.parity)},
                {"weight", value.weight},
                {"basis", strings_to_json(value.basis)},
                {"action", to_json(value.action)}};
}

DKGradedPiece dk_piece_from_json(const Json& j, const std::string& path) {
    DKGradedPiece piece;
    piece.k = int_from_json(field(j, "k", path), at(path, "k"));
    piece.parity = parity_from_json(field(j, "parity", path), at(path, "parity"));
    piece.weight = int_from_json(field(j, "weight", path), at(path, "weight"));
    piece.basis = strings_from_json(field(j, "basis", path), at(path, "basis"));
    piece.action = symrep_from_json(field(j, "action", path), at(path, "action"));
    if (piece.action.rank() != piece.k) throw Error(ErrorCode::InvariantViolation, at(path, "action") + ": rank must equal k");
    if (piece.action.dimension() != static_cast<long>(piece.basis.size())) {
        throw Error(ErrorCode::InvariantViolation, at(path, "action") + ": dimension must equal the basis size");
    }
    return piece;
}

Json to_json(const ArnoldPiece& value) {
    Json basis = Json::array();
    for (const auto& mono : value.basis) {
        Json m = Json::array();
        for (const auto& [a, b] : mono) m.push_back(Json::array({a, b}));
        basis.push_back(m);
    }
    return Json{{"k", value.k}, {"parity", to_string(value.parity)}, {"j", value.j}, {"basis", basis}, {"action", to_json(value.action)}};
}

ArnoldPiece arnold_piece_from_json(const Json& j, const std::string& path) {
    ArnoldPiece piece;
    piece.k = int_from_json(field(j, "k", path), at(path, "k"));
    piece.parity = parity_from_json(field(j, "parity", path), at(path, "parity"));
    piece.j = int_from_json(field(j, "j", path), at(path, "j"));
    const auto& basis = field(j, "basis", path);
    const auto bpath = at(path, "basis");
    expect_array(basis, bpath);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto p = at(bpath, i);
        expect_array(basis[i], p);
        std::vector<std::pair<int, int>> mono;
        int previous = -1;
        for (std::size_t f = 0; f < basis[i].size(); ++f) {
            const auto fp = at(p, f);
            if (!basis[i][f].is_array() || basis[i][f].size() != 2) schema_error(fp, "expected [i, j]");
            const int a = int_from_json(basis[i][f][0], at(fp, 0));
            const int b = int_from_json(basis[i][f][1], at(fp, 1));
            if (a < 0 || a >= b || b >= piece.k || b <= previous) throw Error(ErrorCode::InvariantViolation, fp + ": monomial is not admissible");
            previous = b;
            mono.emplace_back(a, b);
        }
        if (static_cast<int>(mono.size()) != piece.j) throw Error(ErrorCode::InvariantViolation, p + ": monomial has the wrong degree");
        piece.basis.push_back(std::move(mono));
    }
    piece.action = symrep_from_json(field(j, "action", path), at(path, "action"));
    if (piece.action.rank() != piece.k) throw Error(ErrorCode::InvariantViolation, at(path, "action") + ": rank must equal k");
    if (piece.action.dimension() != static_cast<long>(piece.basis.size())) {
        throw Error(ErrorCode::InvariantViolation, at(path, "action") + ": dimension must equal the basis size");
    }
    return piece;
}

std::string checksum(const Json& payload) {
    const std::string bytes = payload.dump();
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string seal(const std::string& kind, const Json& payload) {
    const Json envelope{{"schema_version", schema_version}, {"kind", kind}, {"payload", payload}, {"checksum", checksum(payload)}};
    return envelope.dump();
}

namespace {

Json parse_envelope(const std::string& text) {
    Json envelope;
    try {
        envelope = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("$: ") + e.what());
    }
    if (!envelope.is_object()) schema_error("$", "envelope must be an object");
    const auto& version = field(envelope, "schema_version", "$");
    if (!version.is_number_integer() || version.get<std::int64_t>() != schema_version) {
        schema_error("$.schema_version", "unsupported schema version " + version.dump());
    }
    string_from_json(field(envelope, "kind", "$"), "$.kind");
    return envelope;
}

}  // namespace

std::string peek_kind(const std::string& text) { return parse_envelope(text)["kind"].get<std::string>(); }

Json unseal(const std::string& text, const std::string& kind) {
    Json envelope = parse_envelope(text);
    const auto actual = envelope["kind"].get<std::string>();
    static const std::set<std::string> known{"partition", "rational", "symrep", "character", "chartab", "fimod-table",
                                             "consistent-sequence", "repstab-report", "lie-piece", "dk-piece", "arnold-piece"};
    if (!known.count(actual)) schema_error("$.kind", "unknown kind '" + actual + "'");
    if (!kind.empty() && actual != kind) schema_error("$.kind", "expected '" + kind + "', found '" + actual + "'");
    const auto& payload = field(envelope, "payload", "$");
    const auto sum = string_from_json(field(envelope, "checksum", "$"), "$.checksum");
    if (sum != checksum(payload)) throw Error(ErrorCode::CacheCorrupt, "$.checksum: checksum mismatch");
    return payload;
}

template <> Partition decode<Partition>(const std::string& t) { return partition_from_json(unseal(t, "partition"), "$.payload"); }
template <> Rational decode<Rational>(const std::string& t) { return rational_from_json(unseal(t, "rational"), "$.payload"); }
template <> SymRep decode<SymRep>(const std::string& t) { return symrep_from_json(unseal(t, "symrep"), "$.payload"); }
template <> CharacterVector decode<CharacterVector>(const std::string& t) { return character_from_json(unseal(t, "character"), "$.payload"); }
template <> CharacterTable decode<CharacterTable>(const std::string& t) { return chartab_from_json(unseal(t, "chartab"), "$.payload"); }
template <> FIModuleTable decode<FIModuleTable>(const std::string& t) { return fimod_from_json(unseal(t, "fimod-table"), "$.payload"); }
template <> ConsistentSequence decode<ConsistentSequence>(const std::string& t) {
    return sequence_from_json(unseal(t, "consistent-sequence"), "$.payload");
}
template <> RepStabReport decode<RepStabReport>(const std::string& t) { return report_from_json(unseal(t, "repstab-report"), "$.payload"); }
template <> GradedPieceRep decode<GradedPieceRep>(const std::string& t) { return lie_piece_from_json(unseal(t, "lie-piece"), "$.payload"); }
template <> DKGradedPiece decode<DKGradedPiece>(const std::string& t) { return dk_piece_from_json(unseal(t, "dk-piece"), "$.payload"); }
template <> ArnoldPiece decode<ArnoldPiece>(const std::string& t) { return arnold_piece_from_json(unseal(t, "arnold-piece"), "$.payload"); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    static std::mt19937_64 rng{std::random_device{}()};
    static std::mutex rng_mutex;
    std::uint64_t tag;
    {
        std::lock_guard<std::mutex> lock(rng_mutex);
        tag = rng();
    }
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(tag);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error(ErrorCode::InvalidArgument, "failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::InvalidArgument, "cannot rename into " + path.string());
    }
}

namespace {

std::mutex g_cache_dir_mutex;
bool g_has_override = false;
std::optional<std::filesystem::path> g_override;

}  // namespace

void set_cache_directory(std::optional<std::filesystem::path> dir) {
    std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
    g_has_override = dir.has_value();
    g_override = (dir && dir->empty()) ? std::nullopt : std::move(dir);
}

std::optional<std::filesystem::path> cache_directory() {
    {
        std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
        if (g_has_override) return g_override;
    }
    if (const char* env = std::getenv("REPSTAB_CACHE")) {
        if (*env == '\0') return std::nullopt;
        return std::filesystem::path(env);
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "repstab";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "repstab";
    return std::nullopt;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n) { return dir / ("chartab-" + std::to_string(n) + ".json"); }

std::optional<CharacterTable> load_cached_table(const std::filesystem::path& dir, int n) {
    const auto file = cache_file(dir, n);
    std::error_code ec;
    if (!std::filesystem::exists(file, ec)) return std::nullopt;
    try {
        CharacterTable table = decode<CharacterTable>(read_file(file));
        if (table.n != n) throw Error(ErrorCode::InvariantViolation, "table for n = " + std::to_string(table.n));
        return table;
    } catch (const Error& e) {
        throw Error(ErrorCode::CacheCorrupt, file.string() + ": " + e.what());
    }
}

bool save_cached_table(const std::filesystem::path& dir, const CharacterTable& table) {
    try {
        write_file_atomic(cache_file(dir, table.n), encode(table) + "\n");
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace repstab::store
