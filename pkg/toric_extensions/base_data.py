"""
Typed record classes for the results in data.py: each declared field is a
descriptor that checks the type of what is stored in it
"""



import copy
import inspect


def _declared_fields(cls):
    return inspect.getmembers(cls, lambda member: isinstance(member, TypedField))


class TypedField:
    """
    A descriptor storing one value per record, of one of _expected_types or None
    """

    _expected_types = None
    __name__ = None

    def __init__(self, *args, **kwargs):  # pylint: disable=unused-argument
        if not self._expected_types:
            raise TypeError('{field} declares no expected types'.format(field=type(self).__name__))
        self._default = kwargs.get('default', None)

    def _fresh_default(self):
        return copy.copy(self._default)

    def __get__(self, record, owner):
        if record is None:
            return self
        values = record.__dict__.get('_field_data', {})
        return values.get(self.__name__, self._fresh_default())

    def _check_type(self, value):
        if value is not None and not isinstance(value, tuple(self._expected_types)):
            raise TypeError("'{name}' takes {expected}, not {got}".format(
                name=self.__name__,
                expected=' or '.join(kind.__name__ for kind in self._expected_types),
                got=type(value).__name__,
            ))

    def __set__(self, record, value):
        self._check_type(value)
        record.__dict__.setdefault('_field_data', {})[self.__name__] = value

    def __delete__(self, record):
        record.__dict__.get('_field_data', {}).pop(self.__name__, None)


class StringField(TypedField):
    _expected_types = [str]


class IntegerField(TypedField):
    """
    Counts and indices; bool is rejected although it subclasses int
    """

    _expected_types = [int]

    def _check_type(self, value):
        if isinstance(value, bool):
            raise TypeError("'{name}' takes int, not bool".format(name=self.__name__))
        super()._check_type(value)


class BooleanField(TypedField):
    _expected_types = [bool]


class DictField(TypedField):
    _expected_types = [dict]


class ListField(TypedField):
    """
    Lists; tuples are converted on assignment
    """

    _expected_types = [list, tuple]

    def __set__(self, record, value):
        super().__set__(record, list(value) if isinstance(value, tuple) else value)


class ValueField(TypedField):
    """
    One of the immutable geometric values (Polyhedron, Lattice, Fan, Filtration, ...)
    """

    def __init__(self, *value_types, **kwargs):
        self._expected_types = list(value_types)
        super().__init__(**kwargs)


class EnumField(StringField):
    """
    A string restricted to allowed_values
    """

    def __init__(self, **kwargs):
        self._allowed_values = list(kwargs['allowed_values'])
        super().__init__(**kwargs)

    def __set__(self, record, value):
        if value is not None and self._allowed_values and value not in self._allowed_values:
            raise ValueError("'{name}' must be one of {allowed}, not '{value}'".format(
                name=self.__name__, allowed=', '.join(self._allowed_values), value=value))
        super().__set__(record, value)


class BaseDataObjectMetaClass(type):
    """
    Tells every field descriptor, inherited ones included, the attribute name it
    is stored under. Inherited fields are found with inspect so that no descriptor
    __get__ runs during class creation
    """

    def __new__(mcs, name, bases, attrs):
        for attr_name, attr in attrs.items():
            if isinstance(attr, TypedField):
                attr.__name__ = attr_name
        for base in bases:
            for attr_name, attr in _declared_fields(base):
                attr.__name__ = attr_name
        return super().__new__(mcs, name, bases, attrs)


class BaseDataObject(metaclass=BaseDataObjectMetaClass):
    """
    A record with a fixed set of attributes: the fields and plain class attributes
    declared on the class. Records compare by value and are not hashable
    """

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            if key not in dir(self):
                raise ValueError('{record} has no field {key}'.format(record=type(self).__name__, key=key))
            setattr(self, key, value)

    def __setattr__(self, attribute, value):
        if attribute not in dir(self):
            raise ValueError('{record} has no field {attribute}'.format(
                record=type(self).__name__, attribute=attribute))
        super().__setattr__(attribute, value)

    def __eq__(self, other):
        if not isinstance(other, BaseDataObject):
            return NotImplemented
        return type(self) is type(other) and self.get_fields() == other.get_fields()

    __hash__ = None

    def __str__(self):
        return str(self.get_fields())

    def __repr__(self):
        return '<{name} {fields}>'.format(name=type(self).__name__, fields=self.get_fields())

    @classmethod
    def clone(cls, src):
        """
        A copy of src; list and dict values are copied one level deep
        """

        instance = cls()
        for attr_name, __ in _declared_fields(cls):
            if hasattr(src, attr_name):
                value = getattr(src, attr_name)
                setattr(instance, attr_name, copy.copy(value) if isinstance(value, (dict, list)) else value)
        return instance

    def get_fields(self):
        """
        Field name -> value, with nested records (also inside lists) turned into dicts
        """

        def plain(value):
            return value.get_fields() if isinstance(value, BaseDataObject) else value

        fields = {}
        for attr_name, __ in _declared_fields(type(self)):
            value = getattr(self, attr_name)
            fields[attr_name] = [plain(item) for item in value] if isinstance(value, list) else plain(value)
        return fields

    def validate(self):
        """
        Subclasses raise django ValidationError for records that are inconsistent
        """


class RelatedObjectField(TypedField):
    """
    A nested record of the given BaseDataObject subclass
    """

    def __init__(self, related_type, **kwargs):
        if not (inspect.isclass(related_type) and issubclass(related_type, BaseDataObject)):
            raise TypeError('{related} is not a BaseDataObject subclass'.format(related=related_type))
        self._expected_types = [related_type]
        super().__init__(**kwargs)
