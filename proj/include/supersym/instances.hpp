#pragma once

#include "supersym/graphs.hpp"
#include "supersym/hopf.hpp"
#include "supersym/nsym_super.hpp"
#include "supersym/qsym_super.hpp"
#include "supersym/sym_super.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace supersym {

// (Lambda, zeta_S) on the m-basis. Products and coproducts are
// realization-driven and memoized.
class LambdaInstance {
public:
    using Label = SuperPartition;

    Label unit() const { return SuperPartition{}; }
    int n_degree(const Label& a) const { return a.n_degree(); }
    int parity(const Label& a) const { return a.parity(); }
    std::vector<Label> basis(int k) const { return superpartitions_of_degree(k); }
    hopf::Element<Label> product(const Label& a, const Label& b) const;
    hopf::Tensor<Label> coproduct(const Label& a) const;
    DualNumber zeta(const Label& a) const { return slambda::zeta_S(SymSuper(a)); }
    std::string render(const Label& a) const { return "m" + a.to_string(); }

private:
    mutable std::map<std::pair<Label, Label>, hopf::Element<Label>> product_cache_;
    mutable std::map<Label, hopf::Tensor<Label>> coproduct_cache_;
    mutable std::mutex mutex_;
};

// (sQSym, zeta_Q) on the M-basis.
class QSymInstance {
public:
    using Label = DottedComposition;

    Label unit() const { return DottedComposition{}; }
    int n_degree(const Label& a) const { return a.n_degree(); }
    int parity(const Label& a) const { return a.parity(); }
    std::vector<Label> basis(int k) const { return dotted_compositions_of_degree(k); }
    hopf::Element<Label> product(const Label& a, const Label& b) const;
    hopf::Tensor<Label> coproduct(const Label& a) const;
    DualNumber zeta(const Label& a) const { return sqsym::zeta_Q(QSymSuper(a)); }
    std::string render(const Label& a) const { return "M" + a.to_string(); }

private:
    mutable std::map<std::pair<Label, Label>, hopf::Element<Label>> product_cache_;
    mutable std::mutex mutex_;
};

// The chromatic Hopf superalgebra (G, zeta_ch) on canonical two-colored
// graphs.
class GraphInstance {
public:
    using Label = TwoColoredGraph;

    Label unit() const { return TwoColoredGraph{}; }
    int n_degree(const Label& a) const { return a.n_degree(); }
    int parity(const Label& a) const { return a.parity(); }
    std::vector<Label> basis(int k) const { return graph_basis(k); }
    hopf::Element<Label> product(const Label& a, const Label& b) const
    {
        return graph_product(GraphElement(a), GraphElement(b));
    }
    hopf::Tensor<Label> coproduct(const Label& a) const { return graph_coproduct(a); }
    DualNumber zeta(const Label& a) const { return zeta_ch_graph(a); }
    std::string render(const Label& a) const { return a.to_string(); }
};

const LambdaInstance& lambda_instance();
const QSymInstance& qsym_instance();
const GraphInstance& graph_instance();

} // namespace supersym
