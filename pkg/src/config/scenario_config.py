import math

# Parameter units are pint expressions of the SI unit each value is converted to.
# An empty unit marks a dimensionless parameter, written without a unit token.
# 'default': None marks a required parameter.
# 'angular': True marks an angular frequency; cycle-frequency units (Hz) are refused.

SCENARIO_CONFIGS = {
    'general': {
        'sweep_min_count': 2,
        'tags': ['abraham', 'minkowski'],
    },
    'mirror': {
        'name': 'Immersed mirror',
        'description': 'Radiation pressure on a metal mirror in a liquid, three independent routes',
        'provenance': 'momentum flux S_xx = (n/c)(1+R)S_i; Lorentz force (mu0 sigma/2) Re int E_y H_z* dx '
                      'with skin-layer fields; divergence route S_xx = c g_x/n plus reflected n R S_i/c',
        'params': {
            'n': {'unit': '', 'default': None, 'description': 'refractive index of the liquid'},
            'E0': {'unit': 'V/m', 'default': None, 'description': 'incident field amplitude in the liquid'},
            'omega': {'unit': '1/s', 'angular': True, 'default': None, 'description': 'angular frequency'},
            'sigma': {'unit': 'S/m', 'default': None, 'description': 'conductivity of the mirror metal'},
            'quadrature_tol': {'unit': '', 'default': 1e-8, 'description': 'relative quadrature tolerance'},
            'max_k_over_alpha': {'unit': '', 'default': 0.2, 'description': 'good-conductor regime guard'},
        },
    },
    'drag': {
        'name': 'Photon drag',
        'description': 'Longitudinal field generated in a semiconductor rod by absorbed photon momentum',
        'provenance': 'I sigma_a p / (hbar omega) = e E with p = hbar n omega/c or hbar omega/(n c)',
        'params': {
            'I': {'unit': 'W/m**2', 'default': None, 'description': 'incident intensity'},
            'sigma_a': {'unit': 'm**2', 'default': None, 'description': 'carrier absorption cross section'},
            'omega': {'unit': '1/s', 'angular': True, 'default': None, 'description': 'angular frequency'},
            'n': {'unit': '', 'default': None, 'description': 'refractive index of the semiconductor'},
        },
    },
    'wgm': {
        'name': 'Whispering-gallery torque',
        'description': 'Abraham torque on a cylinder carrying an intensity-modulated rim mode',
        'provenance': 'N_z = -((n^2-1)/c^2) 2 pi a^2 omega0 P0 sin(omega0 t); zero under Minkowski',
        'params': {
            'a': {'unit': 'm', 'default': None, 'description': 'cylinder radius'},
            'P0': {'unit': 'W', 'default': None, 'description': 'circulating power amplitude'},
            'omega0': {'unit': '1/s', 'angular': True, 'default': None, 'description': 'angular modulation frequency'},
            'n': {'unit': '', 'default': 1.45, 'description': 'cylinder index (fused silica)'},
            't': {'unit': 's', 'default': 0.0, 'description': 'evaluation time'},
        },
    },
    'sphere-kick': {
        'name': 'Microsphere kick',
        'description': 'Stokes-damped displacement of a pulse-kicked microsphere in two fluids',
        'provenance': 'M v_max = dG + p_pulse; v = v_max exp(-6 pi mu a t/M); L = M v_max/(6 pi mu a); '
                      'L/L0 = (mu0/mu)[1 + (p(n) - p(n0))/(6 pi a L0 mu0)]',
        'params': {
            'M': {'unit': 'kg', 'default': None, 'description': 'sphere mass'},
            'a': {'unit': 'm', 'default': None, 'description': 'sphere radius'},
            'delta_G': {'unit': 'kg*m/s', 'default': 0.0, 'description': 'ablation momentum'},
            'H': {'unit': 'J', 'default': None, 'description': 'absorbed pulse energy'},
            'n': {'unit': '', 'default': None, 'description': 'refractive index of the fluid'},
            'mu': {'unit': 'Pa*s', 'default': None, 'description': 'dynamic viscosity of the fluid'},
            'n0': {'unit': '', 'default': 1.0, 'description': 'refractive index of the reference fluid'},
            'mu0': {'unit': 'Pa*s', 'default': 1.8e-5, 'description': 'viscosity of the reference fluid (air)'},
            'L0': {'unit': 'm', 'default': None, 'description': 'displacement measured in the reference fluid'},
            't': {'unit': 's', 'default': 0.0, 'description': 'time after maximum velocity'},
        },
    },
    'fiber': {
        'name': 'Fiber exit impulse',
        'description': 'Axial impulse on a fiber end when a pulse leaves into vacuum',
        'provenance': 'impulse = (n - 1) H / c',
        'params': {
            'H': {'unit': 'J', 'default': None, 'description': 'pulse energy'},
            'n': {'unit': '', 'default': None, 'description': 'fiber index'},
        },
    },
    'bec': {
        'name': 'Condensate recoil',
        'description': 'Photon recoil momentum of an atom in a dilute condensate',
        'provenance': 'p = hbar k = hbar n omega / c',
        'params': {
            'n': {'unit': '', 'default': None, 'description': 'refractive index of the gas'},
            'omega': {'unit': '1/s', 'angular': True, 'default': None, 'description': 'angular frequency'},
        },
    },
    'interface': {
        'name': 'Liquid interface',
        'description': 'Surface force of the gradient term across a flat index step',
        'provenance': 'integral of -(eps0/2) E^2 d(n^2)/dx = (eps0/2) E_t^2 (n_from^2 - n_to^2)',
        'params': {
            'E_t': {'unit': 'V/m', 'default': None, 'description': 'tangential field at the interface'},
            'n_from': {'unit': '', 'default': 1.0, 'description': 'index on the incident side'},
            'n_to': {'unit': '', 'default': None, 'description': 'index on the transmitted side'},
        },
    },
    'covariant-checks': {
        'name': 'Covariant checks',
        'description': 'Constitutive reduction, conservation and four-momentum checks of the Minkowski tensor',
        'provenance': 'mu H_mn = F_mn - ((n^2-1)/c^2)(F_ma V_n - F_na V_m) V_a; d_n S_mn = 0; '
                      'sign of c^2 |G|^2 - W^2',
        'params': {
            'n': {'unit': '', 'default': 1.5, 'description': 'refractive index'},
            'E0': {'unit': 'V/m', 'default': 1.0, 'description': 'plane-wave amplitude'},
            'omega': {'unit': '1/s', 'angular': True, 'default': 2.0 * math.pi * 299792458.0 / 1.0e-6,
                      'description': 'angular frequency (1 um vacuum wavelength)'},
            'grid_fraction': {'unit': '', 'default': 0.02, 'description': 'finite-difference step per wavelength'},
        },
    },
}

SCENARIO_NAMES = [name for name in SCENARIO_CONFIGS if name != 'general']
