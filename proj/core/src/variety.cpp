#include <motivic/variety.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace motivic {

namespace {

std::string kind_name(ExprKind k) {
    switch (k) {
    case ExprKind::Empty: return "empty";
    case ExprKind::Point: return "pt";
    case ExprKind::Affine: return "A";
    case ExprKind::Projective: return "P";
    case ExprKind::Torus: return "T";
    case ExprKind::Grassmannian: return "Gr";
    case ExprKind::Product: return "*";
    case ExprKind::DisjointUnion: return "+";
    case ExprKind::Complement: return "\\";
    case ExprKind::VecBundle: return "vb";
    case ExprKind::ProjBundle: return "pb";
    case ExprKind::BlowUp: return "bl";
    case ExprKind::Symbolic: return "sym";
    }
    return "?";
}

void require_nonneg(int n, const char* what) {
    if (n < 0)
        throw DomainError(std::string(what) + " must be nonnegative, got " +
                          std::to_string(n));
}

} // namespace

ExprPtr Expr::empty() {
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::Empty));
    e->dimension_ = -1;
    e->connected_ = false;
    return e;
}

ExprPtr Expr::point() {
    return std::shared_ptr<Expr>(new Expr(ExprKind::Point));
}

ExprPtr Expr::affine(int n) {
    require_nonneg(n, "A(n): n");
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::Affine));
    e->param_ = n;
    e->dimension_ = n;
    e->complete_ = (n == 0);
    return e;
}

ExprPtr Expr::projective(int n) {
    require_nonneg(n, "P(n): n");
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::Projective));
    e->param_ = n;
    e->dimension_ = n;
    return e;
}

ExprPtr Expr::torus(int n) {
    require_nonneg(n, "T(n): n");
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::Torus));
    e->param_ = n;
    e->dimension_ = n;
    e->complete_ = (n == 0);
    return e;
}

ExprPtr Expr::grassmannian(int k, int n) {
    if (k < 0 || n < 0 || k > n)
        throw DomainError("Gr(k,n) requires 0 <= k <= n, got k=" +
                          std::to_string(k) + ", n=" + std::to_string(n));
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::Grassmannian));
    e->param_ = k;
    e->param2_ = n;
    e->dimension_ = k * (n - k);
    return e;
}

ExprPtr Expr::product(ExprPtr a, ExprPtr b) {
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::Product));
    if (a->kind() == ExprKind::Empty || b->kind() == ExprKind::Empty) {
        e->dimension_ = -1;
        e->connected_ = false;
    } else {
        e->dimension_ = a->dimension_ + b->dimension_;
        e->smooth_ = a->smooth_ && b->smooth_;
        e->complete_ = a->complete_ && b->complete_;
        e->connected_ = a->connected_ && b->connected_;
    }
    e->left_ = std::move(a);
    e->right_ = std::move(b);
    return e;
}

ExprPtr Expr::disjoint_union(ExprPtr a, ExprPtr b) {
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::DisjointUnion));
    const bool ae = a->kind() == ExprKind::Empty;
    const bool be = b->kind() == ExprKind::Empty;
    e->dimension_ = std::max(a->dimension_, b->dimension_);
    e->smooth_ = a->smooth_ && b->smooth_;
    e->complete_ = a->complete_ && b->complete_;
    e->connected_ = (ae && b->connected_) || (be && a->connected_);
    e->left_ = std::move(a);
    e->right_ = std::move(b);
    return e;
}

ExprPtr Expr::complement(ExprPtr x, ExprPtr y) {
    if (y->kind() != ExprKind::Empty && y->dimension_ > x->dimension_)
        throw DomainError(
            "complement: the removed subvariety has larger dimension (" +
            std::to_string(y->dimension_) + ") than the ambient (" +
            std::to_string(x->dimension_) + ")");
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::Complement));
    e->dimension_ = x->dimension_;
    e->smooth_ = x->smooth_;
    e->complete_ = x->complete_ && y->kind() == ExprKind::Empty;
    // Connectedness of an open complement is not decidable here; the flag
    // of the ambient variety is carried along as a user assertion.
    e->connected_ = x->connected_;
    e->left_ = std::move(x);
    e->right_ = std::move(y);
    return e;
}

ExprPtr Expr::vec_bundle(ExprPtr base, int rank) {
    require_nonneg(rank, "vb(X, r): r");
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::VecBundle));
    e->param_ = rank;
    e->dimension_ = base->dimension_ < 0 ? -1 : base->dimension_ + rank;
    e->smooth_ = base->smooth_;
    e->complete_ = base->complete_ && rank == 0;
    e->connected_ = base->connected_;
    e->left_ = std::move(base);
    return e;
}

ExprPtr Expr::proj_bundle(ExprPtr base, int rank) {
    if (rank < 1)
        throw DomainError("pb(X, r) requires r >= 1, got " +
                          std::to_string(rank));
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::ProjBundle));
    e->param_ = rank;
    e->dimension_ = base->dimension_ < 0 ? -1 : base->dimension_ + rank - 1;
    e->smooth_ = base->smooth_;
    e->complete_ = base->complete_;
    e->connected_ = base->connected_;
    e->left_ = std::move(base);
    return e;
}

ExprPtr Expr::blow_up(ExprPtr x, ExprPtr center, int codim) {
    if (codim < 1)
        throw DomainError("bl(X; Y; d) requires codimension d >= 1, got " +
                          std::to_string(codim));
    if (x->kind() == ExprKind::Empty || center->kind() == ExprKind::Empty)
        throw DomainError("bl(X; Y; d): X and Y must be nonempty");
    if (!x->smooth_ || !center->smooth_)
        throw DomainError("bl(X; Y; d): X and Y must be smooth");
    if (center->dimension_ != x->dimension_ - codim)
        throw DomainError("bl(X; Y; d): dim Y = " +
                          std::to_string(center->dimension_) +
                          " does not equal dim X - d = " +
                          std::to_string(x->dimension_ - codim));
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::BlowUp));
    e->param_ = codim;
    e->dimension_ = x->dimension_;
    e->smooth_ = true;
    e->complete_ = x->complete_;
    e->connected_ = x->connected_;
    e->left_ = std::move(x);
    e->right_ = std::move(center);
    return e;
}

ExprPtr Expr::symbolic(std::string name, int dimension, bool smooth,
                       bool complete, bool connected) {
    require_nonneg(dimension, "sym: dimension");
    if (name.empty() || name == "point")
        throw DomainError("invalid symbolic generator name '" + name + "'");
    auto e = std::shared_ptr<Expr>(new Expr(ExprKind::Symbolic));
    e->name_ = std::move(name);
    e->dimension_ = dimension;
    e->smooth_ = smooth;
    e->complete_ = complete;
    e->connected_ = connected;
    return e;
}

bool Expr::operator==(const Expr& rhs) const {
    if (kind_ != rhs.kind_ || param_ != rhs.param_ || param2_ != rhs.param2_ ||
        name_ != rhs.name_ || dimension_ != rhs.dimension_ ||
        smooth_ != rhs.smooth_ || complete_ != rhs.complete_ ||
        connected_ != rhs.connected_)
        return false;
    if (static_cast<bool>(left_) != static_cast<bool>(rhs.left_) ||
        static_cast<bool>(right_) != static_cast<bool>(rhs.right_))
        return false;
    if (left_ && !(*left_ == *rhs.left_))
        return false;
    if (right_ && !(*right_ == *rhs.right_))
        return false;
    return true;
}

Laurent gaussian_binomial(int k, int n) {
    if (k < 0 || n < 0 || k > n)
        throw DomainError("gaussian_binomial requires 0 <= k <= n");
    // Pascal recurrence [n,k] = [n-1,k-1] + L^k [n-1,k].
    std::vector<Laurent> row(static_cast<std::size_t>(k) + 1);
    row[0] = Laurent::constant(1);
    for (int m = 1; m <= n; ++m)
        for (int j = std::min(m, k); j >= 1; --j)
            row[j] = row[j - 1] + Laurent::monomial(j, 1) * row[j];
    return row[k];
}

namespace {

Laurent projective_space_class(int n) {
    Laurent p;
    for (int i = 0; i <= n; ++i)
        p += Laurent::monomial(i, 1);
    return p;
}

} // namespace

MotivicClass class_of(const Expr& e, const RegistryPtr& reg) {
    switch (e.kind()) {
    case ExprKind::Empty:
        return MotivicClass::zero(reg);
    case ExprKind::Point:
        return MotivicClass::unit(reg);
    case ExprKind::Affine:
        return MotivicClass::scalar(reg, Laurent::monomial(e.param(), 1));
    case ExprKind::Projective:
        return MotivicClass::scalar(reg, projective_space_class(e.param()));
    case ExprKind::Torus: {
        Laurent t = Laurent::lefschetz() - Laurent::constant(1);
        return MotivicClass::scalar(reg, t.pow(e.param()));
    }
    case ExprKind::Grassmannian:
        return MotivicClass::scalar(reg,
                                    gaussian_binomial(e.param(), e.param2()));
    case ExprKind::Product:
    case ExprKind::DisjointUnion:
    case ExprKind::Complement: {
        // Children evaluated left to right so generator interning order
        // (and with it the rendered output) is deterministic.
        MotivicClass lhs = class_of(*e.left(), reg);
        MotivicClass rhs = class_of(*e.right(), reg);
        if (e.kind() == ExprKind::Product)
            return lhs * rhs;
        if (e.kind() == ExprKind::DisjointUnion)
            return lhs + rhs;
        return lhs - rhs;
    }
    case ExprKind::VecBundle:
        return class_of(*e.left(), reg) * Laurent::monomial(e.param(), 1);
    case ExprKind::ProjBundle:
        return class_of(*e.left(), reg) *
               projective_space_class(e.param() - 1);
    case ExprKind::BlowUp: {
        // [Bl_Y X] = [X] - [Y] + [E] with [E] = (1 + ... + L^{d-1})[Y].
        MotivicClass total = class_of(*e.left(), reg);
        MotivicClass center = class_of(*e.right(), reg);
        return total - center + center * projective_space_class(e.param() - 1);
    }
    case ExprKind::Symbolic: {
        GeneratorId g = reg->intern(e.name(), e.dimension(), e.smooth(),
                                    e.complete(), e.connected());
        return MotivicClass::generator(reg, g);
    }
    }
    throw DomainError("unknown expression kind");
}

ExprPtr exceptional_divisor(const Expr& b) {
    if (b.kind() != ExprKind::BlowUp)
        throw DomainError("exceptional_divisor expects a bl(...) node, got " +
                          kind_name(b.kind()));
    return Expr::proj_bundle(b.right(), b.param());
}

namespace {

int precedence(ExprKind k) {
    switch (k) {
    case ExprKind::Complement: return 1;
    case ExprKind::DisjointUnion: return 2;
    case ExprKind::Product: return 3;
    default: return 4;
    }
}

void render_rec(const Expr& e, std::ostringstream& out) {
    auto child = [&out](const Expr& c, int parent_prec, bool right) {
        const int p = precedence(c.kind());
        const bool parens = p < parent_prec || (p == parent_prec && right);
        if (parens)
            out << "(";
        render_rec(c, out);
        if (parens)
            out << ")";
    };
    switch (e.kind()) {
    case ExprKind::Empty: out << "empty"; return;
    case ExprKind::Point: out << "pt"; return;
    case ExprKind::Affine: out << "A(" << e.param() << ")"; return;
    case ExprKind::Projective: out << "P(" << e.param() << ")"; return;
    case ExprKind::Torus: out << "T(" << e.param() << ")"; return;
    case ExprKind::Grassmannian:
        out << "Gr(" << e.param() << ", " << e.param2() << ")";
        return;
    case ExprKind::Product:
    case ExprKind::DisjointUnion:
    case ExprKind::Complement: {
        const int p = precedence(e.kind());
        child(*e.left(), p, false);
        out << " " << kind_name(e.kind()) << " ";
        child(*e.right(), p, true);
        return;
    }
    case ExprKind::VecBundle:
    case ExprKind::ProjBundle:
        out << kind_name(e.kind()) << "(";
        render_rec(*e.left(), out);
        out << ", " << e.param() << ")";
        return;
    case ExprKind::BlowUp:
        out << "bl(";
        render_rec(*e.left(), out);
        out << "; ";
        render_rec(*e.right(), out);
        out << "; " << e.param() << ")";
        return;
    case ExprKind::Symbolic: {
        std::string flags;
        if (e.smooth())
            flags += 's';
        if (e.complete())
            flags += 'c';
        if (e.connected())
            flags += 'n';
        if (flags.empty())
            flags = "-";
        out << "sym(" << e.name() << ", " << e.dimension() << ", " << flags
            << ")";
        return;
    }
    }
}

} // namespace

std::string Expr::render() const {
    std::ostringstream out;
    render_rec(*this, out);
    return out.str();
}

} // namespace motivic
