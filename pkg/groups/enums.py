from django.db import models


class Family(models.TextChoices):
    CYCLIC = ('cyclic', 'Cyclic Z_n')
    DIHEDRAL = ('dihedral', 'Dihedral D_2k')
    QUATERNION = ('quaternion', 'Generalized quaternion Q_4k')
    SEMIDIHEDRAL = ('semidihedral', 'Semidihedral SD_2^k')
    SYMMETRIC = ('symmetric', 'Symmetric S_d')
    ALTERNATING = ('alternating', 'Alternating A_d')
    HEISENBERG = ('heisenberg', 'Heisenberg group of order p^3')
    MODULAR_P3 = ('modular_p3', 'Modular group of order p^3')
    L2 = ('L2', 'L2(2^k) = SL(2, 2^k)')
    GL2 = ('GL2', 'GL(2, q)')
    GL3 = ('GL3', 'GL(3, q)')
    METACYCLIC = ('metacyclic', 'Metacyclic Z_a : Z_b')
    DIRECT_PRODUCT = ('direct_product', 'Direct product')


FAMILY_ALIASES = {
    'generalized_quaternion': Family.QUATERNION,
}

# Integer parameters each family requires, in the order they appear in names
FAMILY_PARAMS = {
    Family.CYCLIC: ('n',),
    Family.DIHEDRAL: ('k',),
    Family.QUATERNION: ('k',),
    Family.SEMIDIHEDRAL: ('k',),
    Family.SYMMETRIC: ('d',),
    Family.ALTERNATING: ('d',),
    Family.HEISENBERG: ('p',),
    Family.MODULAR_P3: ('p',),
    Family.L2: ('k',),
    Family.GL2: ('q',),
    Family.GL3: ('q',),
    Family.METACYCLIC: ('a', 'b', 'u'),
    Family.DIRECT_PRODUCT: ('left', 'right'),
}


class SmallTarget(models.TextChoices):
    TRIVIAL = ('trivial', 'Trivial group')
    Z4 = ('Z4', 'Cyclic of order 4')
    Z6 = ('Z6', 'Cyclic of order 6')
    Z9 = ('Z9', 'Cyclic of order 9')
    Z2xZ2 = ('Z2xZ2', 'Klein four group')
    Z3xZ3 = ('Z3xZ3', 'Elementary abelian of order 9')
    S3 = ('S3', 'Symmetric group on 3 points')
