"""Common vocabulary IRIs used by the evaluators."""
from .rdf.terms import RDF_NS, XSD, Iri

RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
SKOS = "http://www.w3.org/2004/02/skos/core#"
DCTERMS = "http://purl.org/dc/terms/"
PROV = "http://www.w3.org/ns/prov#"
SCHEMA = "http://schema.org/"
VOID = "http://rdfs.org/ns/void#"
DCAT = "http://www.w3.org/ns/dcat#"
CC = "http://creativecommons.org/ns#"
FOAF = "http://xmlns.com/foaf/0.1/"

RDF_TYPE = Iri(RDF_NS + "type")
RDF_PROPERTY = Iri(RDF_NS + "Property")
RDFS_LABEL = Iri(RDFS + "label")
RDFS_CLASS = Iri(RDFS + "Class")
RDFS_SEEALSO = Iri(RDFS + "seeAlso")
OWL_SAMEAS = Iri(OWL + "sameAs")
OWL_CLASS = Iri(OWL + "Class")
OWL_OBJECT_PROPERTY = Iri(OWL + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL + "DatatypeProperty")
OWL_ANNOTATION_PROPERTY = Iri(OWL + "AnnotationProperty")
SKOS_EXACT_MATCH = Iri(SKOS + "exactMatch")
SKOS_PREF_LABEL = Iri(SKOS + "prefLabel")

DCTERMS_LICENSE = Iri(DCTERMS + "license")
DCTERMS_MODIFIED = Iri(DCTERMS + "modified")
DCTERMS_ISSUED = Iri(DCTERMS + "issued")
DCTERMS_CREATOR = Iri(DCTERMS + "creator")
DCTERMS_CREATED = Iri(DCTERMS + "created")
DCTERMS_SOURCE = Iri(DCTERMS + "source")
SCHEMA_LICENSE = Iri(SCHEMA + "license")
SCHEMA_DATE_MODIFIED = Iri(SCHEMA + "dateModified")
SCHEMA_NAME = Iri(SCHEMA + "name")
SCHEMA_DATASET = Iri(SCHEMA + "Dataset")
CC_LICENSE = Iri(CC + "license")
PROV_WAS_ATTRIBUTED_TO = Iri(PROV + "wasAttributedTo")
PROV_WAS_DERIVED_FROM = Iri(PROV + "wasDerivedFrom")
PROV_WAS_QUOTED_FROM = Iri(PROV + "wasQuotedFrom")
VOID_DATASET = Iri(VOID + "Dataset")
DCAT_DATASET = Iri(DCAT + "Dataset")

# Namespaces holding schema-level terms, excluded from the entity set.
SCHEMA_NAMESPACES = (RDF_NS, RDFS, OWL, XSD)

LICENSE_PREDICATES = (DCTERMS_LICENSE, CC_LICENSE, SCHEMA_LICENSE)
TIMESTAMP_PREDICATES = (DCTERMS_MODIFIED, DCTERMS_ISSUED, SCHEMA_DATE_MODIFIED)
PROVENANCE_PREDICATES = (DCTERMS_CREATOR, DCTERMS_CREATED, PROV_WAS_ATTRIBUTED_TO, DCTERMS_SOURCE)
TRACKING_PREDICATES = (DCTERMS_SOURCE, PROV_WAS_DERIVED_FROM, PROV_WAS_QUOTED_FROM)
LINK_PREDICATES = (OWL_SAMEAS, RDFS_SEEALSO, SKOS_EXACT_MATCH)
LABEL_PREDICATES = (RDFS_LABEL, SKOS_PREF_LABEL, SCHEMA_NAME)
DATASET_CLASSES = (VOID_DATASET, DCAT_DATASET, SCHEMA_DATASET)
SCHEMA_TERM_CLASSES = (
    RDFS_CLASS,
    OWL_CLASS,
    RDF_PROPERTY,
    OWL_OBJECT_PROPERTY,
    OWL_DATATYPE_PROPERTY,
    OWL_ANNOTATION_PROPERTY,
)
