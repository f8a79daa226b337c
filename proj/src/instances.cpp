#include "supersym/instances.hpp"

namespace supersym {

hopf::Element<SuperPartition> LambdaInstance::product(const Label& a, const Label& b) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = product_cache_.find({a, b});
        if (it != product_cache_.end())
            return it->second;
    }
    auto r = slambda::mul(SymSuper(a), SymSuper(b));
    std::lock_guard<std::mutex> lock(mutex_);
    product_cache_.emplace(std::make_pair(a, b), r);
    return r;
}

hopf::Tensor<SuperPartition> LambdaInstance::coproduct(const Label& a) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = coproduct_cache_.find(a);
        if (it != coproduct_cache_.end())
            return it->second;
    }
    auto r = slambda::coproduct(SymSuper(a));
    std::lock_guard<std::mutex> lock(mutex_);
    coproduct_cache_.emplace(a, r);
    return r;
}

hopf::Element<DottedComposition> QSymInstance::product(const Label& a, const Label& b) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = product_cache_.find({a, b});
        if (it != product_cache_.end())
            return it->second;
    }
    auto r = sqsym::mul(QSymSuper(a), QSymSuper(b));
    std::lock_guard<std::mutex> lock(mutex_);
    product_cache_.emplace(std::make_pair(a, b), r);
    return r;
}

hopf::Tensor<DottedComposition> QSymInstance::coproduct(const Label& a) const
{
    return sqsym::coproduct(QSymSuper(a));
}

const LambdaInstance& lambda_instance()
{
    static LambdaInstance inst;
    return inst;
}

const QSymInstance& qsym_instance()
{
    static QSymInstance inst;
    return inst;
}

const GraphInstance& graph_instance()
{
    static GraphInstance inst;
    return inst;
}

// Authoritative chromatic symmetric function in superspace.
SymSuper psi_universal(const GraphElement& f)
{
    return hopf::psi_to_lambda(graph_instance(), f);
}

} // namespace supersym
