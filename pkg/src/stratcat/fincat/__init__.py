"""The category of finite HF sets and the stratified constructions on it."""

from .closure import (
    alpha,
    beta,
    counit_factor,
    e_iso,
    ev_prime,
    exp_map,
    exp_set,
    graph_mor,
    i_iso,
    p_transpose,
    post_exp,
    power_obj,
    theta,
    theta_inv,
    transpose_square_commutes,
    unit_factorization,
    unit_k,
    unit_transpose,
)
from .limits import (
    FALSE,
    OMEGA,
    TRUE,
    Coequalizer,
    Coproduct,
    Equalizer,
    Product,
    Pullback,
    SubobjectRep,
    bang,
    char,
    classifies,
    coequalizer,
    coproduct,
    coproduct_map,
    dual_image,
    equalizer,
    equivalence_classes,
    image,
    image_factorization,
    initial,
    kernel_pair,
    preimage,
    product,
    product_map,
    ptj_from_partition,
    pullback,
    subobject_classifier,
    terminal,
)
from .morphism import (
    MorphismError,
    SetMor,
    T_inverse,
    T_mor,
    T_ob,
    compose,
    constant,
    hom_count,
    homset,
    identity,
    inclusion,
    injections,
)
from .slices import (
    FunctorTable,
    SliceObj,
    T_slice,
    derived_relative_adjunction_check,
    identity_slice,
    m_acute,
    pi_sigma,
    pi_tilde,
    pi_tilde_mor,
    pi_tilde_universal,
    pullback_along,
    sigma,
    slice_homset,
    slice_of,
)
from .spe import SpeReport, verify_spe
