from abc import ABCMeta


class _DocstringInheritee(ABCMeta):
    """Metaclass giving undocumented overrides the docstring of the nearest base."""

    def __new__(mcls, classname, bases, cls_dict):
        cls = super().__new__(mcls, classname, bases, cls_dict)
        for name, member in cls_dict.items():
            if getattr(member, "__doc__", None):
                continue
            for base in cls.__mro__[1:]:
                doc = getattr(getattr(base, name, None), "__doc__", None)
                if doc:
                    try:
                        member.__doc__ = doc
                    except (AttributeError, TypeError):
                        pass
                    break
        return cls
