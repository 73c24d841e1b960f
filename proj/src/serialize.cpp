#include "ncf/serialize.hpp"

#include <sstream>

namespace ncf {

using nlohmann::json;

namespace {

json matrixToJsonStrings(const MatQ& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ratToString(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatQ matrixFromJsonStrings(const json& j) {
    std::size_t rows = j.size();
    std::size_t cols = rows ? j.at(0).size() : 0;
    MatQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (row.size() != cols) throw Error("ragged matrix in JSON");
        for (std::size_t jj = 0; jj < cols; ++jj) {
            const json& cell = row.at(jj);
            if (cell.is_string())
                m(i, jj) = ratFromString(cell.get<std::string>());
            else if (cell.is_number_integer())
                m(i, jj) = Rational(static_cast<long>(cell.get<long long>()));
            else if (cell.is_number())
                m(i, jj) = ratFromString(doubleToString(cell.get<double>()));
            else
                throw Error("matrix entry must be a string or number");
        }
    }
    return m;
}

double cellToDouble(const json& cell) {
    if (cell.is_string()) return toDouble(ratFromString(cell.get<std::string>()));
    if (cell.is_number()) return cell.get<double>();
    throw Error("matrix entry must be a string or number");
}

} // namespace

json alsToJson(const Als& f) {
    json j;
    j["dim"] = f.dim();
    j["letters"] = f.alphabet().names();
    j["A0"] = matrixToJsonStrings(f.pencil().coeff(0));
    json blocks = json::object();
    for (std::size_t l = 1; l <= f.alphabet().size(); ++l)
        blocks[f.alphabet().names()[l - 1]] = matrixToJsonStrings(f.pencil().coeff(l));
    j["A"] = std::move(blocks);
    json v = json::array();
    for (std::size_t i = 0; i < f.dim(); ++i) v.push_back(ratToString(f.v()(i, 0)));
    j["v"] = std::move(v);
    return j;
}

Als alsFromJson(const json& j) {
    Alphabet alpha(j.at("letters").get<std::vector<std::string>>());
    std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim == 0) return Als::zero(alpha);
    LinearPencil p(dim, alpha.size());
    p.coeff(0) = matrixFromJsonStrings(j.at("A0"));
    const json& blocks = j.at("A");
    for (std::size_t l = 1; l <= alpha.size(); ++l) {
        const std::string& name = alpha.names()[l - 1];
        if (blocks.contains(name)) p.coeff(l) = matrixFromJsonStrings(blocks.at(name));
    }
    for (std::size_t l = 0; l <= alpha.size(); ++l)
        if (p.coeff(l).rows() != dim || p.coeff(l).cols() != dim)
            throw Error("coefficient block size does not match dim");
    const json& vj = j.at("v");
    if (vj.size() != dim) throw Error("v length does not match dim");
    MatQ v(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) v(i, 0) = ratFromString(vj.at(i).get<std::string>());
    return Als(std::move(alpha), std::move(p), std::move(v));
}

MatAssignmentQ exactAssignmentFromJson(const json& j, const Alphabet& alpha) {
    MatAssignmentQ sigma;
    sigma.m = j.at("m").get<std::size_t>();
    for (const auto& [name, mat] : j.at("assign").items()) {
        MatQ m = matrixFromJsonStrings(mat);
        if (m.rows() != sigma.m || m.cols() != sigma.m)
            throw DimensionMismatch("assignment for '" + name + "' is not m x m");
        sigma.byLetter[alpha.letter(name).index] = std::move(m);
    }
    return sigma;
}

MatAssignmentD doubleAssignmentFromJson(const json& j, const Alphabet& alpha) {
    MatAssignmentD sigma;
    sigma.m = j.at("m").get<std::size_t>();
    for (const auto& [name, mat] : j.at("assign").items()) {
        MatD m(mat.size(), mat.size() ? mat.at(0).size() : 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = cellToDouble(mat.at(i).at(k));
        if (m.rows() != sigma.m || m.cols() != sigma.m)
            throw DimensionMismatch("assignment for '" + name + "' is not m x m");
        sigma.byLetter[alpha.letter(name).index] = std::move(m);
    }
    return sigma;
}

MatD doubleMatrixFromJson(const json& j) {
    const json& rows = j.is_object() ? j.at("matrix") : j;
    MatD m(rows.size(), rows.size() ? rows.at(0).size() : 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (rows.at(i).size() != m.cols()) throw Error("ragged matrix in JSON");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = cellToDouble(rows.at(i).at(k));
    }
    return m;
}

json matToJson(const MatQ& m) { return matrixToJsonStrings(m); }

json matToJson(const MatD& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json witnessToJson(const ProbeWitness& w, const Alphabet& alpha) {
    json j;
    j["m"] = w.assignment.m;
    json assign = json::object();
    for (const auto& [idx, mat] : w.assignment.byLetter)
        assign[alpha.names()[idx - 1]] = matrixToJsonStrings(mat);
    j["assign"] = std::move(assign);
    j["value"] = matrixToJsonStrings(w.value);
    return j;
}

std::string traceToCsv(const NewtonTrace& trace) {
    std::ostringstream out;
    out << "k,norm_B,norm_err,norm_commutator\n";
    for (const auto& row : trace.rows) {
        out << row.k << ',' << doubleToString(row.stepNorm) << ',';
        if (row.errNorm) out << doubleToString(*row.errNorm);
        out << ',';
        if (row.commNorm) out << doubleToString(*row.commNorm);
        out << '\n';
    }
    return out.str();
}

} // namespace ncf
